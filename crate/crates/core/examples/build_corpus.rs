//! Regenerates the shipped corpus: `cargo run -p blockscope-core --example build_corpus -- corpus`.

use std::path::Path;

use blockscope_core::families::*;
use blockscope_core::io::write_group;
use blockscope_core::perm::{PermGroup, Permutation};
use blockscope_core::Result;

fn file_stem(name: &str) -> String {
    let raw: String = name
        .chars()
        .map(|c| match c {
            'a'..='z' | '0'..='9' => c,
            'A'..='Z' => c.to_ascii_lowercase(),
            '+' => 'p',
            '-' => 'm',
            _ => '_',
        })
        .collect();
    raw.split('_').filter(|s| !s.is_empty()).collect::<Vec<_>>().join("_")
}

fn from_cycles(degree: usize, gens: &[&[&[usize]]]) -> Result<PermGroup> {
    let gens = gens.iter().map(|c| Permutation::from_cycles(degree, c)).collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// `F_p^n ⋊ H` on `p^n` points, `H` generated by the given matrices.
fn affine_matrix(p: usize, n: usize, mats: &[Vec<Vec<usize>>]) -> Result<PermGroup> {
    let size = p.pow(n as u32);
    let decode = |x: usize| (0..n).map(|i| (x / p.pow(i as u32)) % p).collect::<Vec<_>>();
    let encode = |v: &[usize]| v.iter().enumerate().map(|(i, &c)| c * p.pow(i as u32)).sum::<usize>();
    let mut gens = Vec::new();
    for i in 0..n {
        let images: Vec<u32> = (0..size)
            .map(|x| {
                let mut v = decode(x);
                v[i] = (v[i] + 1) % p;
                encode(&v) as u32
            })
            .collect();
        gens.push(Permutation::from_images(&images)?);
    }
    for m in mats {
        let images: Vec<u32> = (0..size)
            .map(|x| {
                let v = decode(x);
                let w: Vec<usize> = (0..n).map(|r| (0..n).map(|c| m[r][c] * v[c]).sum::<usize>() % p).collect();
                encode(&w) as u32
            })
            .collect();
        gens.push(Permutation::from_images(&images)?);
    }
    PermGroup::new(size, gens)
}

fn corpus() -> Result<Vec<(String, PermGroup)>> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    let mut add = |name: &str, g: PermGroup| out.push((name.to_string(), g));

    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 25, 27, 32] {
        add(&format!("C{n}"), cyclic(n));
    }
    let c = cyclic;
    add("C2xC2", direct_product(&c(2), &c(2)));
    add("C2xC4", direct_product(&c(2), &c(4)));
    add("C2xC2xC2", direct_product(&direct_product(&c(2), &c(2)), &c(2)));
    add("C3xC3", direct_product(&c(3), &c(3)));
    add("C2xC6", direct_product(&c(2), &c(6)));
    add("C4xC4", direct_product(&c(4), &c(4)));
    add("C2xC8", direct_product(&c(2), &c(8)));
    add("C2xC2xC4", direct_product(&direct_product(&c(2), &c(2)), &c(4)));
    add("C2^4", direct_product(&direct_product(&c(2), &c(2)), &direct_product(&c(2), &c(2))));
    add("C3xC6", direct_product(&c(3), &c(6)));
    add("C3xC9", direct_product(&c(3), &c(9)));
    add("C5xC5", direct_product(&c(5), &c(5)));
    add("C3xC3xC3", direct_product(&direct_product(&c(3), &c(3)), &c(3)));
    add("C7xC7", direct_product(&c(7), &c(7)));

    for n in [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 24, 32] {
        add(&format!("D{}", 2 * n), dihedral(n));
    }
    add("D8reg", d8_regular());
    for n in [2, 3, 4, 5, 6, 7, 8, 10, 12, 16] {
        add(&format!("Q{}", 4 * n), dicyclic(n)?);
    }
    for n in 4..=7 {
        add(&format!("S{n}"), symmetric(n));
    }
    for n in 4..=7 {
        add(&format!("A{n}"), alternating(n));
    }

    add("C5:C4", metacyclic(5, 4, 2)?);
    add("C5:C4(r=4)", metacyclic(5, 4, 4)?);
    add("C7:C3", metacyclic(7, 3, 2)?);
    add("C3:C4", metacyclic(3, 4, 2)?);
    add("C3:C8", metacyclic(3, 8, 2)?);
    add("C5:C8", metacyclic(5, 8, 2)?);
    add("C7:C9", metacyclic(7, 9, 2)?);
    add("C9:C3", metacyclic(9, 3, 4)?);
    add("C9:C6", metacyclic(9, 6, 2)?);
    add("C4:C4", metacyclic(4, 4, 3)?);
    add("C8:C4", metacyclic(8, 4, 3)?);
    add("M16", metacyclic(8, 2, 5)?);
    add("SD16", metacyclic(8, 2, 3)?);
    add("M32", metacyclic(16, 2, 9)?);
    add("SD32", metacyclic(16, 2, 7)?);
    for (p, d) in [(5, 4), (7, 3), (7, 6), (11, 5), (11, 10), (13, 3), (13, 4), (13, 6), (13, 12), (17, 4), (17, 8), (19, 3), (19, 9)] {
        add(&format!("F{}(C{p}:C{d})", p * d), affine(p, d)?);
    }

    add("Heis3", heisenberg(3)?);
    add("Heis5", heisenberg(5)?);
    add("2^(1+4)+", extraspecial_32(true)?);
    add("2^(1+4)-", extraspecial_32(false)?);
    let d8 = dihedral(4);
    let zd = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?;
    let c4 = c(4);
    let z4 = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?;
    add("C4oD8", central_product(&c4, &z4, &d8, &zd)?);
    add("D8xC2", direct_product(&d8, &c(2)));
    add("Q8xC2", direct_product(&quaternion(), &c(2)));
    add("D8xC4", direct_product(&d8, &c(4)));
    add("Q8xC4", direct_product(&quaternion(), &c(4)));
    add("D8xD8", direct_product(&d8, &d8));

    let s3 = symmetric(3);
    let a4 = alternating(4);
    add("S3xS3", direct_product(&s3, &s3));
    add("S3xC3", direct_product(&s3, &c(3)));
    add("S3xC5", direct_product(&s3, &c(5)));
    add("S3xD10", direct_product(&s3, &dihedral(5)));
    add("D10xC3", direct_product(&dihedral(5), &c(3)));
    add("S4xC2", direct_product(&symmetric(4), &c(2)));
    add("S4xC3", direct_product(&symmetric(4), &c(3)));
    add("A4xC2", direct_product(&a4, &c(2)));
    add("A4xC3", direct_product(&a4, &c(3)));
    add("A4xA4", direct_product(&a4, &a4));
    add("S3xS4", direct_product(&s3, &symmetric(4)));
    add("Q8xC3", direct_product(&quaternion(), &c(3)));
    add("D8xC3", direct_product(&d8, &c(3)));
    add("A5xC2", direct_product(&alternating(5), &c(2)));
    add("A5xC3", direct_product(&alternating(5), &c(3)));
    add("SL(2,3)xC2", direct_product(&sl2_3(), &c(2)));

    add("SL(2,3)", sl2_3());
    add("PSL(2,7)", psl3_2());
    add("PSL(2,8)", psl2(8)?);
    add("PSL(2,11)", psl2(11)?);
    add("PSL(2,13)", psl2(13)?);
    add("PGL(2,7)", pgl2(7)?);
    add("PGL(2,9)", pgl2(9)?);
    add("PGL(2,11)", pgl2(11)?);

    add("C3wrC2", from_cycles(6, &[&[&[0, 1, 2]], &[&[0, 3], &[1, 4], &[2, 5]]])?);
    add("C2wrC3", from_cycles(6, &[&[&[0, 1]], &[&[0, 2, 4], &[1, 3, 5]]])?);
    add("S3wrC2", from_cycles(6, &[&[&[0, 1]], &[&[0, 1, 2]], &[&[0, 3], &[1, 4], &[2, 5]]])?);
    add("A4wrC2", from_cycles(8, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]], &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]])?);
    add("S4wrC2", from_cycles(8, &[&[&[0, 1]], &[&[0, 1, 2, 3]], &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]])?);

    let m = |rows: &[&[usize]]| rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    add("3^2:C4", affine_matrix(3, 2, &[m(&[&[0, 2], &[1, 0]])])?);
    add("3^2:Q8", affine_matrix(3, 2, &[m(&[&[0, 2], &[1, 0]]), m(&[&[1, 1], &[1, 2]])])?);
    add("3^2:C8", affine_matrix(3, 2, &[m(&[&[0, 1], &[1, 1]])])?);
    add("ASL(2,3)", affine_matrix(3, 2, &[m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[1, 1]])])?);
    add("AGL(2,3)", affine_matrix(3, 2, &[m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[1, 1]]), m(&[&[2, 0], &[0, 1]])])?);
    add("AGL(3,2)", affine_matrix(2, 3, &[m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]), m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])])?);
    add("2^3:C7", affine_matrix(2, 3, &[m(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]])])?);
    Ok(out)
}

fn witnesses() -> Result<Vec<(String, PermGroup)>> {
    Ok(vec![
        ("C5".into(), cyclic(5)),
        ("D14".into(), dihedral(7)),
        ("D8".into(), d8_regular()),
        ("Q8".into(), quaternion()),
        ("C5:C4".into(), metacyclic(5, 4, 2)?),
        ("C7:C3".into(), metacyclic(7, 3, 2)?),
        ("S4".into(), symmetric(4)),
    ])
}

fn write_all(dir: &Path, groups: &[(String, PermGroup)]) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| blockscope_core::Error::Input(e.to_string()))?;
    for (name, g) in groups {
        write_group(name, g, dir.join(format!("{}.json", file_stem(name))))?;
    }
    Ok(())
}

fn main() -> Result<()> {
    let root = std::env::args().nth(1).unwrap_or_else(|| "corpus".into());
    let root = Path::new(&root);
    let groups = corpus()?;
    let witness = witnesses()?;
    for (name, g) in groups.iter().chain(&witness) {
        println!("{name:>14} {:>6}", g.order());
    }
    write_all(&root.join("groups"), &groups)?;
    write_all(&root.join("witness"), &witness)?;
    println!("{} corpus groups, {} witnesses", groups.len(), witness.len());
    Ok(())
}
