//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;

use opcalc_core::algebra::{AlgebraKind, Monomial, NormalPoly};
use opcalc_core::closedforms::{
    binomial_expand, enumerate_compositions, gaussian_binomial, infer_layer_formula, layer_decomposition,
    q_binomial_expand, shift_expand, shift_p_compositions, shift_p_recurrence, weyl_expand,
};
use opcalc_core::exactnum::{binomial, rat, ratio, stirling2, ExactRational, Indeterminate, UniPoly};
use opcalc_core::frontend::{from_json, normalize, render_text, to_json};
use opcalc_core::oracle::{trial_rng, verify_expansion, verify_identity, QAction, ShiftAction, WeylAction};
use opcalc_core::AnyPoly;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn from_int(v: &opcalc_core::ExactInt) -> ExactRational {
    ExactRational::from_integer(v.clone())
}

fn main_theorem() -> Check {
    let start = Instant::now();
    let base = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Shift);
    for r in 0..=12 {
        ensure(shift_expand(r) == base.pow(r), || format!("r={r}: closed form differs from power"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))
}

fn method_equivalence() -> Check {
    for r in 0..=12u32 {
        for d in 0..=r {
            let rec = shift_p_recurrence(r, d.into());
            let comp = shift_p_compositions(r, d.into());
            ensure(rec == comp, || format!("P_{{{r},{d}}}: {rec} vs {comp}"))?;
            let count = enumerate_compositions(r - d, d as usize + 1).count();
            ensure(binomial(r, d.into()) == count.into(), || format!("r={r} d={d}: {count} compositions"))?;
        }
    }
    Ok(())
}

fn p_structure() -> Check {
    let n_pow = |r: u32| UniPoly::monomial(Indeterminate::N, rat(1), r as usize);
    for r in 0..=12u32 {
        ensure(shift_p_recurrence(r, 0) == n_pow(r), || format!("P_{{{r},0}} is not n^{r}"))?;
        ensure(shift_p_recurrence(r, r.into()).is_one(), || format!("P_{{{r},{r}}} is not 1"))?;
        for d in 0..=r {
            let p = shift_p_recurrence(r, d.into());
            ensure(p.degree() == Some((r - d) as usize), || format!("deg P_{{{r},{d}}}"))?;
            ensure(p.leading_coeff() == Some(&from_int(&binomial(r, d.into()))), || {
                format!("leading coefficient of P_{{{r},{d}}}")
            })?;
            ensure(p.eval(&rat(0)) == from_int(&stirling2(r, d)), || format!("P_{{{r},{d}}}(0)"))?;
        }
    }
    Ok(())
}

fn pascal() -> Check {
    let base = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Commutative);
    for r in 0..=30u32 {
        let p = base.pow(r);
        ensure(p == binomial_expand(r), || format!("r={r}: power differs from closed form"))?;
        ensure(p.len() == r as usize + 1, || format!("r={r}: {} terms", p.len()))?;
        for i in 0..=r {
            let c = p.coeff(Monomial::new(i, r - i));
            ensure(c == from_int(&binomial(r, i.into())), || format!("r={r}: coefficient of x^{i}"))?;
        }
    }
    Ok(())
}

fn q_binomial() -> Check {
    let base = NormalPoly::<UniPoly>::generator_sum(AlgebraKind::QCommutative);
    for r in 0..=10u32 {
        ensure(q_binomial_expand(r) == base.pow(r), || format!("r={r}: closed form differs from power"))?;
        for i in 0..=r {
            let g = gaussian_binomial(r, i.into());
            ensure(g == gaussian_binomial(r, (r - i).into()), || format!("[{r} {i}] not symmetric"))?;
            ensure(g.eval(&rat(1)) == from_int(&binomial(r, i.into())), || format!("[{r} {i}] at q=1"))?;
        }
    }
    Ok(())
}

fn weyl() -> Check {
    let base = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Weyl);
    for r in 0..=12u32 {
        let closed = weyl_expand(r);
        ensure(closed == base.pow(r), || format!("r={r}: closed form differs from power"))?;
        ensure(closed.terms().values().all(|c| c.is_integer()), || format!("r={r}: non-integral coefficient"))?;
    }
    Ok(())
}

/// `coeff * N * ((N + n))^e * inner`, products taken as if commutative,
/// then read as a shift-algebra element.
fn displayed_layer(r: u32, coeff: u32, e: u32, inner: &[(u32, u32, ExactRational)]) -> NormalPoly {
    let comm = AlgebraKind::Commutative;
    let inner = NormalPoly::from_terms(comm, inner.iter().map(|(i, j, c)| (Monomial::new(*i, *j), c.clone())));
    let prefix = NormalPoly::term(comm, Monomial::new(0, 1), from_int(&binomial(r, coeff.into())));
    let body = &(&prefix * &NormalPoly::generator_sum(comm).pow(e)) * &inner;
    body.as_kind(AlgebraKind::Shift)
}

fn displayed_expansion() -> Check {
    for r in 6..=12u32 {
        let layers = layer_decomposition(r, 3);
        let rv = i64::from(r);
        let top = NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Commutative).pow(r).as_kind(AlgebraKind::Shift);
        ensure(layers[0] == top, || format!("r={r}: degree r"))?;
        ensure(layers[1] == displayed_layer(r, 2, r - 2, &[(0, 0, rat(1))]), || format!("r={r}: degree r-1"))?;
        let m2 = [(0, 1, ratio(3 * rv - 5, 4)), (1, 0, rat(1))];
        ensure(layers[2] == displayed_layer(r, 3, r - 4, &m2), || format!("r={r}: degree r-2"))?;
        if r >= 8 {
            let m3 = [(0, 2, ratio((rv - 2) * (rv - 3), 2)), (1, 1, rat(2 * (rv - 3))), (2, 0, rat(1))];
            ensure(layers[3] == displayed_layer(r, 4, r - 6, &m3), || format!("r={r}: degree r-3"))?;
        }
    }
    Ok(())
}

fn layer_recovery() -> Check {
    let r_poly = |c: &[(i64, i64)]| UniPoly::new(Indeterminate::R, c.iter().map(|&(a, b)| ratio(a, b)).collect());
    let f2 = infer_layer_formula(2, &[6, 7, 8, 9, 10], 11).map_err(|e| format!("m=2: {e}"))?;
    let want2 = vec![r_poly(&[(-5, 4), (3, 4)]), r_poly(&[(1, 1)])];
    ensure(f2.q_coeffs == want2, || format!("m=2: got {f2}"))?;
    let f3 = infer_layer_formula(3, &[8, 9, 10, 11, 12], 13).map_err(|e| format!("m=3: {e}"))?;
    let want3 = vec![r_poly(&[(3, 1), (-5, 2), (1, 2)]), r_poly(&[(-6, 1), (2, 1)]), r_poly(&[(1, 1)])];
    ensure(f3.q_coeffs == want3, || format!("m=3: got {f3}"))?;
    for (f, r) in [(&f2, 14), (&f3, 15)] {
        let layer = &layer_decomposition(r, f.m)[f.m as usize];
        ensure(f.assemble(r).as_ref() == Ok(layer), || format!("m={}: held-out r={r}", f.m))?;
    }
    Ok(())
}

fn perturb<C: opcalc_core::Coefficient>(p: &NormalPoly<C>, m: Monomial) -> NormalPoly<C> {
    p + &NormalPoly::term(p.kind(), m, C::one())
}

fn oracle_suite() -> Check {
    for (kind, r) in [(AlgebraKind::Shift, 8), (AlgebraKind::Weyl, 8), (AlgebraKind::QCommutative, 6)] {
        let report = verify_identity(kind, r, 50, 2024);
        ensure(report.trials.len() == 50 && report.all_passed(), || report.to_string())?;
    }
    let shift = perturb(&shift_expand(8), Monomial::new(3, 2));
    let report = verify_expansion::<ShiftAction>(&shift, &NormalPoly::generator_sum(AlgebraKind::Shift), 8, 50, 1);
    ensure(!report.all_passed(), || "perturbed shift expansion passed".into())?;
    let weyl = perturb(&weyl_expand(8), Monomial::new(4, 0));
    let report = verify_expansion::<WeylAction>(&weyl, &NormalPoly::generator_sum(AlgebraKind::Weyl), 8, 50, 1);
    ensure(!report.all_passed(), || "perturbed Weyl expansion passed".into())?;
    let q = perturb(&q_binomial_expand(6), Monomial::new(2, 4));
    let report = verify_expansion::<QAction>(&q, &NormalPoly::generator_sum(AlgebraKind::QCommutative), 6, 50, 1);
    ensure(!report.all_passed(), || "perturbed q expansion passed".into())
}

fn random_poly(kind: AlgebraKind, rng: &mut impl Rng) -> AnyPoly {
    let monos: Vec<Monomial> =
        (0..rng.gen_range(0..=6)).map(|_| Monomial::new(rng.gen_range(0..=5), rng.gen_range(0..=5))).collect();
    if kind.has_q() {
        let terms = monos.into_iter().map(|m| {
            let c: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-12..=12)).collect();
            (m, UniPoly::from_ints(Indeterminate::Q, &c))
        });
        NormalPoly::from_terms(kind, terms.collect::<Vec<_>>()).into()
    } else {
        let terms = monos.into_iter().map(|m| (m, rat(rng.gen_range(-40..=40))));
        NormalPoly::from_terms(kind, terms.collect::<Vec<_>>()).into()
    }
}

fn opcalc(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_opcalc"))
        .args(args)
        .env_remove("OPCALC_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("opcalc {}: {}", args.join(" "), String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn frontend() -> Check {
    for (k, kind) in AlgebraKind::ALL.into_iter().enumerate() {
        let mut rng = trial_rng(7, k as u32);
        for trial in 0..200 {
            let p = random_poly(kind, &mut rng);
            for raw in [false, true] {
                let text = render_text(&p, raw);
                let back = normalize(&text, kind).map_err(|e| format!("{kind} trial {trial}: `{text}`: {e}"))?;
                ensure(back == p, || format!("{kind} trial {trial}: `{text}` reparsed differently"))?;
            }
            let json = to_json(&p);
            let back = from_json(&json).map_err(|e| format!("{kind} trial {trial}: {e}"))?;
            ensure(back == p && to_json(&back) == json, || format!("{kind} trial {trial}: JSON round trip"))?;
        }
    }

    let odd = NormalPoly::from_terms(
        AlgebraKind::Weyl,
        [(Monomial::new(7, 3), "-98765432109876543210/3".parse().unwrap()), (Monomial::ONE, ratio(1, 7))],
    );
    let json = to_json(&odd.into());
    ensure(to_json(&from_json(&json).map_err(|e| e.to_string())?) == json, || "rational JSON round trip".into())?;

    for kind in AlgebraKind::ALL {
        for r in 0..=12u32 {
            for format in ["text", "latex", "json"] {
                let rs = r.to_string();
                let common = ["expand", "--algebra", kind.name(), "--r", &rs, "--format", format];
                let closed = opcalc(&[&common[..], &["--method", "closed"]].concat())?;
                let power = opcalc(&[&common[..], &["--method", "power"]].concat())?;
                ensure(closed == power, || format!("{kind} r={r} {format}: CLI outputs differ"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("shift closed form equals (N+n)^r for r <= 12, under 10 s", main_theorem),
        ("composition sum equals recurrence, C(r,d) compositions", method_equivalence),
        ("degree, leading coefficient, ends and Stirling values of P", p_structure),
        ("commutative power matches Pascal for r <= 30", pascal),
        ("q-binomial closed form and Gaussian binomial symmetry", q_binomial),
        ("Weyl closed form equals power, integral coefficients", weyl),
        ("top four layers of (N+n)^r for r in 6..12", displayed_expansion),
        ("layer formulas recovered for m = 2, 3 with holdout", layer_recovery),
        ("operator oracle passes and catches a perturbed coefficient", oracle_suite),
        ("parser and JSON round trips, closed and power CLI output identical", frontend),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2}  {name}  ({:.2?})", k + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
