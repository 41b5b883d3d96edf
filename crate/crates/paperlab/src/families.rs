//! Enumerated families of small test modules.

use frobrig::koszul::ElementSequence;
use frobrig::{GradedMatrix, PolyRing, Polynomial, PresentedModule, QuotientRing, Result};

/// A module with a human-readable label.
#[derive(Debug, Clone)]
pub struct Labeled {
    pub label: String,
    pub module: PresentedModule,
}

fn parse_all(r: &QuotientRing, gens: &[&str]) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| r.parse(g)).collect()
}

fn cyclic(r: &QuotientRing, gens: &[&str]) -> Result<Labeled> {
    Ok(Labeled {
        label: format!("R/({})", gens.join(", ")),
        module: PresentedModule::cyclic(r, &parse_all(r, gens)?)?,
    })
}

/// Cokernel of a matrix given by rows of polynomial text.
fn coker(r: &QuotientRing, twists: Vec<i32>, rows: &[&[&str]]) -> Result<Labeled> {
    let amb = r.ambient();
    let ncols = rows[0].len();
    let cols = (0..ncols)
        .map(|j| rows.iter().map(|row| amb.parse(row[j])).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let label = format!(
        "coker[{}]",
        rows.iter().map(|row| row.join(" ")).collect::<Vec<_>>().join("; ")
    );
    Ok(Labeled {
        label,
        module: PresentedModule::new(r, GradedMatrix::from_columns(amb, twists, cols)?)?,
    })
}

/// Twenty-four modules over `F_p[x, y]`: monomial and binomial cyclic
/// quotients, direct sums, and a few small cokernels.
pub fn regular_plane_modules(r: &QuotientRing) -> Result<Vec<Labeled>> {
    let mut out = Vec::new();
    for gens in [
        &["x", "y"][..],
        &["x"],
        &["y"],
        &["x*y"],
        &["x + y"],
        &["x^2"],
        &["x^2", "y"],
        &["x^2", "x*y", "y^2"],
        &["x^2", "y^2"],
        &["x^3", "x*y", "y^2"],
        &["x^2", "x*y"],
        &["x*y", "y^3"],
        &["x^2 + y^2"],
        &["x^2 + x*y", "y^3"],
        &["x^3", "y^3", "x^2*y"],
        &["x^2*y", "x*y^2"],
    ] {
        out.push(cyclic(r, gens)?);
    }
    let k = cyclic(r, &["x", "y"])?;
    let line = cyclic(r, &["x"])?;
    out.push(Labeled {
        label: "k + R/(x)".into(),
        module: k.module.direct_sum(&line.module)?,
    });
    out.push(Labeled {
        label: "k + k(-1)".into(),
        module: k.module.direct_sum(&k.module.shifted(1))?,
    });
    out.push(Labeled {
        label: "R".into(),
        module: PresentedModule::free(r, vec![0]),
    });
    out.push(coker(r, vec![0, 0], &[&["x", "y"], &["0", "x"]])?);
    out.push(coker(r, vec![0, 0], &[&["x", "y"], &["y", "x"]])?);
    out.push(coker(r, vec![0, 1], &[&["x^2", "0"], &["y", "x"]])?);
    out.push(coker(r, vec![0, 0], &[&["x^2", "x*y", "0"], &["0", "y^2", "x"]])?);
    out.push(coker(r, vec![0], &[&["x^2", "y^2", "x*y"]])?);
    Ok(out)
}

/// Every nonzero homogeneous form of degree `d` in `R`, up to scalars, as
/// combinations of standard monomials.
pub fn forms(r: &QuotientRing, d: u32) -> Vec<Polynomial> {
    let amb = r.ambient();
    let p = amb.characteristic() as u64;
    let basis = r.standard_monomials(d).pop().unwrap_or_default();
    let k = basis.len();
    let mut out = Vec::new();
    let total = p.pow(k as u32);
    for code in 1..total {
        let mut c = code;
        let mut coeffs = Vec::with_capacity(k);
        for _ in 0..k {
            coeffs.push(c % p);
            c /= p;
        }
        if coeffs.iter().rev().find(|&&a| a != 0) != Some(&1) {
            continue;
        }
        let terms = basis
            .iter()
            .zip(&coeffs)
            .filter(|(_, &a)| a != 0)
            .map(|(m, &a)| (*m, a as i64))
            .collect();
        out.push(Polynomial::from_terms(amb, terms).unwrap());
    }
    out
}

/// Finite-length modules over a ring of dimension at most one in two
/// variables: cyclic quotients by pairs of forms of degree at most
/// `max_degree`, plus a handful of cokernels. Duplicates by label are
/// skipped; only nonzero finite-length modules are kept.
pub fn finite_length_modules(r: &QuotientRing, max_degree: u32) -> Result<Vec<Labeled>> {
    let mut candidates: Vec<Polynomial> = Vec::new();
    for d in 1..=max_degree {
        candidates.extend(forms(r, d));
    }
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |l: Labeled, out: &mut Vec<Labeled>| {
        if !l.module.is_zero() && l.module.length().finite().is_some() && seen.insert(l.label.clone()) {
            out.push(l);
        }
    };
    for (i, f) in candidates.iter().enumerate() {
        let l = Labeled {
            label: format!("R/({f})"),
            module: PresentedModule::cyclic(r, std::slice::from_ref(f))?,
        };
        push(l, &mut out);
        for g in &candidates[i + 1..] {
            let l = Labeled {
                label: format!("R/({f}, {g})"),
                module: PresentedModule::cyclic(r, &[f.clone(), g.clone()])?,
            };
            push(l, &mut out);
        }
    }
    let free = Labeled {
        label: "R".into(),
        module: PresentedModule::free(r, vec![0]),
    };
    push(free, &mut out);
    let names = r.ambient().names().to_vec();
    if names.len() == 2 {
        let (x, y) = (names[0].as_str(), names[1].as_str());
        let x2 = format!("{x}^2");
        let y2 = format!("{y}^2");
        push(coker(r, vec![0, 0], &[&[x, y, "0"], &["0", x, y]])?, &mut out);
        push(coker(r, vec![0, 1], &[&[&x2, "0", &y2, "0"], &[y, x, "0", y]])?, &mut out);
    }
    Ok(out)
}

/// A module together with a sequence on the ring.
#[derive(Debug, Clone)]
pub struct SequenceInstance {
    pub label: String,
    pub module: PresentedModule,
    pub sequence: ElementSequence,
}

fn seq_instance(r: &QuotientRing, gens: &[&str], seq: &[&str]) -> Result<SequenceInstance> {
    let m = cyclic(r, gens)?;
    Ok(SequenceInstance {
        label: format!("{} on ({})", m.label, seq.join(", ")),
        module: m.module,
        sequence: ElementSequence::parse(r, seq)?,
    })
}

fn ring(names: &[&str], p: u64, ideal: &[&str]) -> Result<QuotientRing> {
    let s = PolyRing::grevlex(names, p)?;
    let gens = ideal.iter().map(|g| s.parse(g)).collect::<Result<Vec<_>>>()?;
    QuotientRing::from_generators(&s, gens)
}

/// Sixty-odd pairs `(M, x)` over polynomial rings and a quadric cone, with
/// `x` regular on the ring. Finite covolume is not guaranteed; callers
/// filter.
pub fn euler_instances() -> Result<Vec<SequenceInstance>> {
    let mut out = Vec::new();
    let plane_modules: &[&[&str]] = &[
        &["x"],
        &["x^2"],
        &["x*y"],
        &["x^2", "x*y"],
        &["x + y"],
        &["x^2", "y^2"],
        &["x", "y"],
        &["x^2 + y^2", "x*y"],
        &["x^3", "y"],
        &["0"],
    ];
    let plane_seqs: &[&[&str]] = &[&["x", "y"], &["y", "x"], &["x + y", "y"], &["x^2", "y"], &["x^2", "y^2"], &["y"]];
    for p in [2, 3] {
        let r = ring(&["x", "y"], p, &[])?;
        for gens in plane_modules {
            for seq in plane_seqs {
                out.push(seq_instance(&r, gens, seq)?);
            }
        }
    }
    let r = ring(&["x", "y", "z"], 5, &[])?;
    for gens in [&["x"][..], &["x", "y"], &["x*y"], &["x*y*z"], &["x^2", "y*z"], &["x", "y", "z"]] {
        for seq in [&["x", "y", "z"][..], &["x + z", "y", "z"], &["x", "y"]] {
            out.push(seq_instance(&r, gens, seq)?);
        }
    }
    let cone = ring(&["x", "y", "z"], 3, &["x*y - z^2"])?;
    for gens in [&["x"][..], &["x", "z"], &["z"], &["0"], &["x", "y", "z"]] {
        for seq in [&["x", "y"][..], &["x + y", "z"]] {
            out.push(seq_instance(&cone, gens, seq)?);
        }
    }
    Ok(out)
}

/// Instances for the comparison of `l(F^n(M)/xF^n(M))` with
/// `q^c chi(M, R/x)`: modules of positive dimension with a sequence of
/// length `dim M`.
pub fn frobenius_length_instances() -> Result<Vec<SequenceInstance>> {
    let mut out = Vec::new();
    for p in [2, 3] {
        let r = ring(&["x", "y"], p, &[])?;
        for (gens, seq) in [
            (&["x"][..], &["y"][..]),
            (&["x^2"], &["y"]),
            (&["x*y"], &["x + y"]),
            (&["x^2", "x*y"], &["y"]),
            (&["x^2 + y^2"], &["x"]),
            (&["0"], &["x", "y"]),
            (&["x*y^2"], &["x + y"]),
        ] {
            out.push(seq_instance(&r, gens, seq)?);
        }
    }
    let r = ring(&["x", "y", "z"], 2, &[])?;
    for (gens, seq) in [
        (&["x"][..], &["y", "z"][..]),
        (&["x", "y"], &["z"]),
        (&["x*y"], &["x + y", "z"]),
        (&["x^2", "x*y"], &["y", "z"]),
        (&["x*z", "y*z"], &["x", "y"]),
    ] {
        out.push(seq_instance(&r, gens, seq)?);
    }
    let cone = ring(&["x", "y", "z"], 3, &["x*y - z^2"])?;
    for (gens, seq) in [(&["x", "z"][..], &["y"][..]), (&["x"], &["y"]), (&["0"], &["x", "y"])] {
        out.push(seq_instance(&cone, gens, seq)?);
    }
    Ok(out)
}
