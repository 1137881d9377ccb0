use std::collections::HashMap;

use blockscope_core::chartab::{compute_table, compute_table_with_prime, read_table, write_table, CharacterTable, ClassInfo};
use blockscope_core::cyclo::{Cyclotomic, Rational};
use blockscope_core::families;
use blockscope_core::perm::PermGroup;
use blockscope_core::Error;

fn table(g: &PermGroup) -> CharacterTable {
    compute_table(g, "test").unwrap()
}

#[test]
fn small_tables_have_the_expected_degrees() {
    assert_eq!(table(&families::symmetric(3)).degrees(), vec![1, 1, 2]);
    assert_eq!(table(&families::symmetric(4)).degrees(), vec![1, 1, 2, 3, 3]);
    assert_eq!(table(&families::alternating(5)).degrees(), vec![1, 3, 3, 4, 5]);
    assert_eq!(table(&families::quaternion()).degrees(), vec![1, 1, 1, 1, 2]);
    assert_eq!(table(&PermGroup::trivial(1)).degrees(), vec![1]);
}

#[test]
fn cyclic_five_has_root_of_unity_values() {
    let t = table(&families::cyclic(5));
    assert_eq!(t.degrees(), vec![1; 5]);
    for i in 0..5 {
        for k in 0..5 {
            let v = t.value(i, k);
            let is_root = (0..5).any(|e| *v == Cyclotomic::root_of_unity(5, e));
            assert!(is_root, "χ_{i}(K_{k}) = {v}");
        }
    }
}

#[test]
fn first_row_is_trivial_and_first_column_is_degrees() {
    let t = table(&families::dihedral(5));
    assert!(t.is_trivial_row(0));
    assert!(t.irr().iter().all(|r| r[0].to_integer().is_some_and(|d| d > 0)));
}

#[test]
fn inner_products() {
    let s4 = families::symmetric(4);
    let t = table(&s4);
    let one = Rational::from_integer(1);
    for i in 0..t.num_classes() {
        assert_eq!(t.inner_product(t.row(i), t.row(i)).unwrap(), one);
        for j in 0..i {
            assert_eq!(t.inner_product(t.row(i), t.row(j)).unwrap(), Rational::from_integer(0));
        }
    }
    // permutation character: number of fixed points of each class representative
    let cd = s4.class_data().unwrap();
    let pi: Vec<Cyclotomic> = cd
        .classes()
        .iter()
        .map(|c| {
            let fixed = (0..4).filter(|&x| c.representative.image(x) == x).count();
            Cyclotomic::integer(12, fixed as i128)
        })
        .collect();
    assert_eq!(t.inner_product(&pi, t.row(0)).unwrap(), one);
    assert!(matches!(t.inner_product(&pi[..3], t.row(0)), Err(Error::Input(_))));
}

#[test]
fn alternative_prime_gives_the_same_table() {
    let g = families::symmetric(4);
    let t = table(&g);
    // 37 and 61 are ≡ 1 (mod 12) and exceed 2√24
    for l in [37, 61] {
        assert_eq!(compute_table_with_prime(&g, "test", l).unwrap(), t);
    }
    assert!(compute_table_with_prime(&g, "test", 13).is_ok());
    assert!(compute_table_with_prime(&g, "test", 17).is_err());
}

#[test]
fn round_trip_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    for g in [families::alternating(5), families::affine(7, 3).unwrap(), families::quaternion()] {
        let t = table(&g);
        write_table(&t, &path).unwrap();
        assert_eq!(read_table(&path).unwrap(), t);
    }
}

#[test]
fn corrupted_degree_is_rejected() {
    let t = table(&families::symmetric(4));
    let text = t.to_json();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["irr"][4][0] = serde_json::json!({"conductor": 12, "coeffs": ["4"]});
    let err = CharacterTable::from_json(&value.to_string(), "corrupt").unwrap_err();
    match err {
        Error::InvariantViolation(msg) => assert!(msg.contains("Σ χ(1)²"), "{msg}"),
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn orthogonality_failure_is_rejected() {
    let t = table(&families::symmetric(3));
    let mut value: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
    // swap two entries of the sign character so degrees still add up
    let row = value["irr"][1].as_array().unwrap().clone();
    value["irr"][1][1] = row[2].clone();
    value["irr"][1][2] = row[1].clone();
    let err = CharacterTable::from_json(&value.to_string(), "swap").unwrap_err();
    assert!(matches!(err, Error::InvariantViolation(ref m) if m.contains("orthogonality")), "{err:?}");
}

#[test]
fn parse_errors_carry_a_locus() {
    let err = CharacterTable::from_json("{\"name\": 3}", "bad.json").unwrap_err();
    match err {
        Error::Parse { locus, .. } => assert!(locus.starts_with("bad.json:1:")),
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn external_s4_table_matches_after_canonicalization() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/s4_external.json");
    let ext = read_table(path).unwrap();
    let ours = table(&families::symmetric(4));
    assert!(!ext.same_content(&ours));
    assert!(ext.canonicalize().same_content(&ours.canonicalize()));
    assert!(ours.canonicalize().same_content(&ours));
}

/// Characters of an abelian group built directly as homomorphisms to roots of
/// unity, extended from generator images by breadth-first search.
fn dual_group_table(g: &PermGroup) -> CharacterTable {
    let cd = g.class_data().unwrap();
    let elems = cd.elements().clone();
    let n = g.exponent().unwrap();
    let gens: Vec<_> = g.generators().to_vec();
    let mut choices: Vec<Vec<u64>> = vec![vec![]];
    for s in &gens {
        let o = s.order();
        let mut next = Vec::new();
        for c in &choices {
            for a in 0..o {
                let mut c = c.clone();
                c.push(a * (n / o));
                next.push(c);
            }
        }
        choices = next;
    }
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    'outer: for c in choices {
        let mut exp: HashMap<usize, u64> = HashMap::new();
        let id = elems.index_of(&g.identity()).unwrap();
        exp.insert(id, 0);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for (s, &a) in gens.iter().zip(&c) {
                let y = elems.index_of(&(elems.get(x) * s)).unwrap();
                let e = (exp[&x] + a) % n;
                match exp.get(&y) {
                    Some(&f) if f != e => continue 'outer,
                    Some(_) => {}
                    None => {
                        exp.insert(y, e);
                        queue.push(y);
                    }
                }
            }
        }
        let row: Vec<u64> = (0..cd.len()).map(|k| exp[&elems.index_of(&cd.classes()[k].representative).unwrap()]).collect();
        if seen.insert(row.clone()) {
            rows.push(row.iter().map(|&e| Cyclotomic::root_of_unity(n as u32, e as i64)).collect());
        }
    }
    assert_eq!(rows.len() as u64, g.order());
    let primes: Vec<u64> = blockscope_core::arith::prime_factors(n);
    let classes = cd
        .classes()
        .iter()
        .map(|c| ClassInfo {
            size: 1,
            order: c.element_order,
            powermaps: primes.iter().map(|&p| (p, cd.class_of(&c.representative.pow(p as i64)).unwrap())).collect(),
        })
        .collect();
    // put the trivial character first so the table validates
    rows.sort_by_key(|r| r.iter().any(|v| v.to_integer() != Some(1)));
    CharacterTable::new("dual", g.order(), n as u32, classes, rows).unwrap()
}

#[test]
fn abelian_tables_match_the_dual_group() {
    let groups = vec![
        families::cyclic(1),
        families::cyclic(6),
        families::cyclic(8),
        families::direct_product(&families::cyclic(2), &families::cyclic(4)),
        families::direct_product(&families::cyclic(3), &families::cyclic(3)),
        families::direct_product(&families::cyclic(2), &families::direct_product(&families::cyclic(2), &families::cyclic(2))),
        families::direct_product(&families::cyclic(4), &families::cyclic(6)),
        families::cyclic(15),
    ];
    for g in groups {
        let ours = table(&g).canonicalize();
        let dual = dual_group_table(&g).canonicalize();
        assert!(ours.same_content(&dual), "order {}", g.order());
    }
}
