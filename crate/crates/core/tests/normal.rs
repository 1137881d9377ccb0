use std::sync::Arc;

use blockscope_core::blocks::block_partition;
use blockscope_core::chartab::compute_table;
use blockscope_core::families::{alternating, cyclic, d8_regular, direct_product, metacyclic, quaternion, sl2_3, symmetric};
use blockscope_core::normal::{
    check_blockabove, check_covering, check_isomblocks, check_onlycovering, check_quotient_inflation,
    check_restnumber, check_tech, check_unique_block, class_fusion, covering_blocks, harness_normal_subgroups,
    inflation, restriction_constituents, sylow_with_centralizer, NormalPair,
};
use blockscope_core::perm::{normal_subgroups, PermGroup, Permutation};
use blockscope_core::Error;

fn normal_of_order(g: &PermGroup, order: u64) -> PermGroup {
    normal_subgroups(g).unwrap().into_iter().find(|n| n.order() == order).unwrap()
}

fn pair(g: &PermGroup, n: &PermGroup) -> NormalPair {
    let t = Arc::new(compute_table(g, "G").unwrap());
    NormalPair::new(g, t, n).unwrap()
}

#[test]
fn three_cycles_of_a3_fuse_in_s3() {
    let s3 = symmetric(3);
    let a3 = alternating(3);
    let f = class_fusion(&s3, &a3).unwrap();
    let nd = a3.class_data().unwrap();
    let gd = s3.class_data().unwrap();
    assert_eq!(f.map.len(), 3);
    assert_eq!(f.map[0], 0);
    assert_eq!(f.map[1], f.map[2]);
    assert_eq!(gd.classes()[f.map[1]].element_order, 3);
    // oracle: a transposition conjugates one 3-cycle to the other
    let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
    let (a, b) = (&nd.classes()[1].representative, &nd.classes()[2].representative);
    assert_eq!(&a.conjugate_by(&t), b);
}

#[test]
fn fusion_into_itself_is_identity() {
    for g in [symmetric(4), quaternion(), alternating(5)] {
        let f = class_fusion(&g, &g).unwrap();
        assert_eq!(f.map, (0..f.map.len()).collect::<Vec<_>>());
    }
}

#[test]
fn klein_involutions_fuse_in_s4() {
    let s4 = symmetric(4);
    let v4 = normal_of_order(&s4, 4);
    let f = class_fusion(&s4, &v4).unwrap();
    assert_eq!(f.map.len(), 4);
    let target = f.map[1];
    assert!(f.map[1..].iter().all(|&k| k == target));
    assert_eq!(s4.class_data().unwrap().classes()[target].size, 3);
}

#[test]
fn fusion_rejects_non_subgroups() {
    let g = symmetric(3);
    let other = cyclic(4);
    let h = PermGroup::new(4, other.generators().to_vec()).unwrap();
    let g4 = PermGroup::new(4, g.generators().iter().map(|x| {
        let mut im: Vec<u32> = x.images().to_vec();
        im.push(3);
        Permutation::from_images(&im).unwrap()
    }).collect()).unwrap();
    assert!(matches!(class_fusion(&g4, &h), Err(Error::Domain(_))));
}

#[test]
fn non_normal_pair_is_rejected() {
    let s3 = symmetric(3);
    let c2 = s3.subgroup(vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()]).unwrap();
    let t = Arc::new(compute_table(&s3, "S3").unwrap());
    assert!(matches!(NormalPair::new(&s3, t, &c2), Err(Error::Domain(_))));
}

#[test]
fn s3_degree_two_splits_over_a3() {
    let s3 = symmetric(3);
    let a3 = alternating(3);
    let tg = compute_table(&s3, "S3").unwrap();
    let tn = compute_table(&a3, "A3").unwrap();
    let f = class_fusion(&s3, &a3).unwrap();
    let chi = (0..3).find(|&i| tg.degree(i) == 2).unwrap();
    let cons = restriction_constituents(&tg, &tn, &f, chi).unwrap();
    assert_eq!(cons.len(), 2);
    assert!(cons.iter().all(|&(theta, m)| m == 1 && tn.degree(theta) == 1 && theta != 0));
}

#[test]
fn linear_characters_restrict_irreducibly() {
    for g in [symmetric(4), d8_regular(), sl2_3(), metacyclic(7, 3, 2).unwrap()] {
        let t = Arc::new(compute_table(&g, "G").unwrap());
        for n in normal_subgroups(&g).unwrap() {
            let pr = NormalPair::new(&g, t.clone(), &n).unwrap();
            for chi in (0..t.num_classes()).filter(|&c| t.degree(c) == 1) {
                let cons = pr.constituents(chi);
                assert_eq!(cons.len(), 1);
                assert_eq!(cons[0].1, 1);
            }
        }
    }
}

#[test]
fn s4_degree_two_over_a4_matches_twist_count() {
    let s4 = symmetric(4);
    let a4 = normal_of_order(&s4, 12);
    let pr = pair(&s4, &a4);
    let t = &pr.t_g;
    let chi = (0..t.num_classes()).find(|&i| t.degree(i) == 2).unwrap();
    // oracle: twist by each linear character of S4 directly on the table
    let linear: Vec<usize> = (0..t.num_classes()).filter(|&i| t.degree(i) == 1).collect();
    let fixing = linear
        .iter()
        .filter(|&&b| (0..t.num_classes()).all(|k| &(t.value(chi, k) * t.value(b, k)) == t.value(chi, k)))
        .count();
    assert_eq!(fixing, 2);
    assert_eq!(pr.constituents(chi).len(), fixing);
    let out = check_restnumber(&pr).unwrap();
    assert!(out.applicable && out.holds, "{:?}", out.detail);
}

#[test]
fn s4_over_a4_at_two_has_single_covering_pair() {
    let s4 = symmetric(4);
    let a4 = normal_of_order(&s4, 12);
    let tg = compute_table(&s4, "S4").unwrap();
    let tn = compute_table(&a4, "A4").unwrap();
    let f = class_fusion(&s4, &a4).unwrap();
    let cov = covering_blocks(&tg, &tn, &f, 2).unwrap();
    assert_eq!(cov.into_iter().collect::<Vec<_>>(), vec![(0, 0)]);
}

#[test]
fn blocks_cover_only_themselves_when_n_is_g() {
    for (g, p) in [(alternating(5), 2), (symmetric(4), 3), (sl2_3(), 3)] {
        let t = compute_table(&g, "G").unwrap();
        let f = class_fusion(&g, &g).unwrap();
        let cov = covering_blocks(&t, &t, &f, p).unwrap();
        let n = block_partition(&t, p).unwrap().blocks.len();
        assert_eq!(cov.into_iter().collect::<Vec<_>>(), (0..n).map(|b| (b, b)).collect::<Vec<_>>());
    }
}

#[test]
fn principal_covers_principal() {
    for g in [symmetric(4), sl2_3(), alternating(5), quaternion()] {
        let t = Arc::new(compute_table(&g, "G").unwrap());
        for p in blockscope_core::arith::prime_factors(g.order()) {
            let dg = block_partition(&t, p).unwrap();
            for n in normal_subgroups(&g).unwrap() {
                let pr = NormalPair::new(&g, t.clone(), &n).unwrap();
                let dn = block_partition(&pr.t_n, p).unwrap();
                assert!(pr.covering(&dg, &dn).contains(&(dg.principal_index, dn.principal_index)));
            }
        }
    }
}

#[test]
fn q8_center_quotient_blocks_pull_back() {
    let q8 = quaternion();
    let t = compute_table(&q8, "Q8").unwrap();
    let dg = block_partition(&t, 2).unwrap();
    let out = check_quotient_inflation(&q8, &t, &dg).unwrap();
    assert!(out.applicable && out.holds, "{:?}", out.detail);
    // oracle: Q8/Z is C2×C2, one 2-block, inflating to the four linear characters
    let inf = inflation(&q8, &t, &blockscope_core::perm::center(&q8).unwrap()).unwrap();
    assert_eq!(inf.table.num_classes(), 4);
    let mut rows = inf.rows.clone();
    rows.sort_unstable();
    let linear: Vec<usize> = (0..t.num_classes()).filter(|&i| t.degree(i) == 1).collect();
    assert_eq!(rows, linear);
}

#[test]
fn inflated_rows_are_the_kernel_rows() {
    for g in [symmetric(4), sl2_3(), metacyclic(5, 4, 2).unwrap(), direct_product(&symmetric(3), &cyclic(3))] {
        let t = Arc::new(compute_table(&g, "G").unwrap());
        for n in normal_subgroups(&g).unwrap() {
            let pr = NormalPair::new(&g, t.clone(), &n).unwrap();
            let mut rows = inflation(&g, &t, &n).unwrap().rows;
            rows.sort_unstable();
            assert_eq!(rows, pr.kernel_rows());
        }
    }
}

#[test]
fn isomblocks_with_n_equal_g() {
    let g = symmetric(4);
    let pr = pair(&g, &g);
    for p in [2, 3] {
        let d = block_partition(&pr.t_g, p).unwrap();
        let (_, pc) = sylow_with_centralizer(&g, p).unwrap();
        let out = check_isomblocks(&pr, &d, &d, &pc);
        assert!(out.applicable && out.holds, "{:?}", out.detail);
    }
}

#[test]
fn blockabove_s4_over_a4() {
    let s4 = symmetric(4);
    let a4 = normal_of_order(&s4, 12);
    let pr = pair(&s4, &a4);
    let dg = block_partition(&pr.t_g, 2).unwrap();
    let dn = block_partition(&pr.t_n, 2).unwrap();
    assert!(check_blockabove(&pr, &dg, &dn).holds);
}

#[test]
fn tech_applies_to_d8_at_two() {
    // k(B_0(D8)) = 5 and P·C_G(P) = G, so only M = G qualifies
    let g = d8_regular();
    let t = Arc::new(compute_table(&g, "D8").unwrap());
    let dg = block_partition(&t, 2).unwrap();
    let (_, pc) = sylow_with_centralizer(&g, 2).unwrap();
    let mut applicable = 0;
    for n in normal_subgroups(&g).unwrap() {
        let pr = NormalPair::new(&g, t.clone(), &n).unwrap();
        let dn = block_partition(&pr.t_n, 2).unwrap();
        let out = check_tech(&pr, &dg, &dn, &pc);
        applicable += out.applicable as usize;
        assert!(out.holds);
    }
    assert_eq!(applicable, 1);
}

#[test]
fn unique_block_for_constrained_groups() {
    for (g, p) in [(symmetric(4), 2), (sl2_3(), 2), (metacyclic(7, 3, 2).unwrap(), 7)] {
        let t = compute_table(&g, "G").unwrap();
        let d = block_partition(&t, p).unwrap();
        let out = check_unique_block(&g, &d).unwrap();
        assert!(out.applicable && out.holds, "{:?}", out.detail);
    }
    // A5 is not 2-solvable
    let a5 = alternating(5);
    let d = block_partition(&compute_table(&a5, "A5").unwrap(), 2).unwrap();
    assert!(!check_unique_block(&a5, &d).unwrap().applicable);
}

#[test]
fn every_applicable_check_holds_on_small_groups() {
    let groups = [
        symmetric(4),
        sl2_3(),
        alternating(5),
        d8_regular(),
        quaternion(),
        metacyclic(7, 3, 2).unwrap(),
        metacyclic(5, 4, 2).unwrap(),
        direct_product(&symmetric(3), &cyclic(3)),
        symmetric(5),
    ];
    let mut applicable = 0;
    for g in groups {
        let t = Arc::new(compute_table(&g, "G").unwrap());
        let subs = harness_normal_subgroups(&g).unwrap();
        for p in blockscope_core::arith::prime_factors(g.order()) {
            let dg = block_partition(&t, p).unwrap();
            let (sylow, pc) = sylow_with_centralizer(&g, p).unwrap();
            let q = check_quotient_inflation(&g, &t, &dg).unwrap();
            assert!(q.holds);
            for n in &subs {
                let pr = NormalPair::new(&g, t.clone(), n).unwrap();
                let dn = block_partition(&pr.t_n, p).unwrap();
                for out in [
                    check_blockabove(&pr, &dg, &dn),
                    check_covering(&pr, &dg, &dn),
                    check_onlycovering(&pr, &dg, &dn, &pc, sylow.order()),
                    check_isomblocks(&pr, &dg, &dn, &pc),
                    check_tech(&pr, &dg, &dn, &pc),
                    check_restnumber(&pr).unwrap(),
                ] {
                    assert!(out.holds, "{:?}", out.detail);
                    applicable += out.applicable as usize;
                }
            }
        }
    }
    assert!(applicable > 50, "{applicable}");
}
