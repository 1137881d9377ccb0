use blockscope_core::blocks::{
    analyze, block_partition, block_partition_with_ideal, brauer_count_identity, central_character,
    cyclic_defect_count, exact_l, l_of_block, BlockReport,
};
use blockscope_core::chartab::{compute_table, CharacterTable};
use blockscope_core::cyclo::Cyclotomic;
use blockscope_core::families;
use blockscope_core::perm::{PermGroup, SylowTag};
use blockscope_core::Error;

fn table(g: &PermGroup) -> CharacterTable {
    compute_table(g, "test").unwrap()
}

fn principal_k(g: &PermGroup, p: u64) -> (usize, usize, SylowTag) {
    let d = analyze(g, &table(g), p).unwrap();
    (d.principal().k, d.principal().k0, d.sylow.unwrap().tag)
}

#[test]
fn central_character_examples() {
    let s3 = families::symmetric(3);
    let t = table(&s3);
    for k in 0..3 {
        let size = t.classes()[k].size as i128;
        assert_eq!(central_character(&t, 0, k), Cyclotomic::integer(6, size));
    }
    for chi in 0..3 {
        assert_eq!(central_character(&t, chi, 0), Cyclotomic::one(6));
    }
    // classes: 1, (0 1), (0 1 2); row 2 has degree 2
    assert_eq!(t.degree(2), 2);
    assert_eq!(central_character(&t, 2, 2), Cyclotomic::integer(6, -1));
}

/// Blocks of a rational table from integer central characters reduced mod `p`.
fn rational_blocks(t: &CharacterTable, p: u64) -> Vec<Vec<usize>> {
    let k = t.num_classes();
    let mut keys: Vec<(Vec<i128>, Vec<usize>)> = Vec::new();
    for chi in 0..k {
        let d = t.degree(chi) as i128;
        let key: Vec<i128> = (0..k)
            .map(|c| {
                let v = t.value(chi, c).to_integer().unwrap() * t.classes()[c].size as i128;
                assert_eq!(v % d, 0);
                (v / d).rem_euclid(p as i128)
            })
            .collect();
        match keys.iter_mut().find(|(kk, _)| *kk == key) {
            Some((_, members)) => members.push(chi),
            None => keys.push((key, vec![chi])),
        }
    }
    keys.into_iter().map(|(_, m)| m).collect()
}

#[test]
fn symmetric_group_blocks_match_integer_congruences() {
    for n in 3..=6 {
        let t = table(&families::symmetric(n));
        for p in [2, 3, 5] {
            let ours: Vec<Vec<usize>> = block_partition(&t, p).unwrap().blocks.into_iter().map(|b| b.chars).collect();
            assert_eq!(ours, rational_blocks(&t, p), "S{n} at {p}");
        }
    }
}

#[test]
fn s4_blocks() {
    let t = table(&families::symmetric(4));
    let d2 = block_partition(&t, 2).unwrap();
    assert_eq!(d2.blocks.len(), 1);
    assert_eq!(d2.principal().k, 5);
    let d3 = block_partition(&t, 3).unwrap();
    let shape: Vec<(Vec<u64>, u32)> =
        d3.blocks.iter().map(|b| (b.chars.iter().map(|&c| t.degree(c)).collect(), b.defect)).collect();
    assert_eq!(shape, vec![(vec![1, 1, 2], 1), (vec![3], 0), (vec![3], 0)]);
    let d5 = block_partition(&t, 5).unwrap();
    assert_eq!(d5.blocks.len(), 5);
    assert!(d5.blocks.iter().all(|b| b.k == 1 && b.defect == 0 && b.l == 1));
    assert!(matches!(block_partition(&t, 4), Err(Error::Domain(_))));
}

#[test]
fn l_examples() {
    let c5 = table(&families::cyclic(5));
    assert_eq!(block_partition(&c5, 5).unwrap().principal().l, 1);
    let s3 = table(&families::symmetric(3));
    assert_eq!(block_partition(&s3, 3).unwrap().principal().l, 2);
    let q8 = table(&families::quaternion());
    assert_eq!(block_partition(&q8, 2).unwrap().principal().l, 1);
}

#[test]
fn modular_and_exact_ranks_agree() {
    for g in [families::alternating(5), families::psl3_2(), families::affine(7, 3).unwrap(), families::dicyclic(3).unwrap()] {
        let t = table(&g);
        for p in [2, 3, 5, 7] {
            let d = block_partition(&t, p).unwrap();
            let regular = t.p_regular_classes(p).len();
            assert_eq!(d.blocks.iter().map(|b| b.l).sum::<usize>(), regular);
            for b in &d.blocks {
                assert_eq!(l_of_block(&t, b).unwrap(), exact_l(&t, b).unwrap());
            }
        }
    }
}

#[test]
fn witness_principal_blocks() {
    assert_eq!(principal_k(&families::d8_regular(), 2), (5, 4, SylowTag::D8));
    assert_eq!(principal_k(&families::metacyclic(7, 3, 2).unwrap(), 7).0, 5);
    let (k, _, tag) = principal_k(&families::affine(5, 4).unwrap(), 5);
    assert_eq!((k, tag), (5, SylowTag::C5));
    let (k, _, tag) = principal_k(&families::alternating(5), 2);
    assert_eq!((k, tag), (4, SylowTag::C2xC2));
}

#[test]
fn block_choice_of_ideal_does_not_matter() {
    let groups = [
        families::metacyclic(7, 3, 2).unwrap(),
        families::alternating(5),
        families::cyclic(15),
        families::psl3_2(),
        families::affine(13, 4).unwrap(),
    ];
    let mut compared = 0;
    for g in &groups {
        let t = table(g);
        for p in [2, 3, 5, 7, 13] {
            let first = block_partition(&t, p).unwrap();
            let mut choice = 1;
            while let Ok(other) = block_partition_with_ideal(&t, p, choice) {
                assert_eq!(other, first);
                choice += 1;
                compared += 1;
            }
        }
    }
    assert!(compared > 10, "only {compared} alternative ideals exercised");
}

#[test]
fn brauer_identity_examples() {
    let q8 = families::quaternion();
    let id = brauer_count_identity(&q8, &table(&q8), 2).unwrap();
    assert_eq!((id.lhs, id.center_p_part, id.l_principal), (5, 2, 1));
    assert_eq!(id.terms.iter().map(|t| t.l).collect::<Vec<_>>(), vec![1, 1, 1]);
    assert!(id.terms.iter().all(|t| t.centralizer_order == 4));
    assert_eq!(id.rhs, 5);
    let c5 = families::cyclic(5);
    let id = brauer_count_identity(&c5, &table(&c5), 5).unwrap();
    assert_eq!((id.lhs, id.center_p_part, id.terms.len(), id.rhs), (5, 5, 0, 5));
    let s4 = families::symmetric(4);
    let id = brauer_count_identity(&s4, &table(&s4), 2).unwrap();
    assert!(id.holds() && id.lhs == 5);
}

#[test]
fn cyclic_defect_examples() {
    let d14 = cyclic_defect_count(&families::dihedral(7), 7).unwrap();
    assert_eq!((d14.e, d14.predicted), (2, 5));
    let c5 = cyclic_defect_count(&families::cyclic(5), 5).unwrap();
    assert_eq!((c5.e, c5.predicted), (1, 5));
    let f21 = cyclic_defect_count(&families::metacyclic(7, 3, 2).unwrap(), 7).unwrap();
    assert_eq!((f21.e, f21.predicted), (3, 5));
    assert!(matches!(cyclic_defect_count(&families::symmetric(4), 2), Err(Error::Domain(_))));
}

#[test]
fn block_report_json() {
    let g = families::symmetric(3);
    let d = analyze(&g, &table(&g), 3).unwrap();
    let json = serde_json::to_value(BlockReport::new("S3", &d)).unwrap();
    assert_eq!(json["group"], "S3");
    assert_eq!(json["sylow"]["tag"], "C3");
    assert_eq!(json["blocks"][0]["chars"], serde_json::json!([0, 1, 2]));
    assert_eq!(json["blocks"][0]["l"], 2);
}
