//! One PASS/FAIL line per acceptance criterion.

mod common;

use freediv::classify::{classify, detect_weights, ClassifyOptions, DivisorProfile};
use freediv::cohomology::{
    build_slice, coboundary_lifts, deformation_equation, ft1, ft1_for_basis, ft1_plane_curve, is_coboundary,
    jacobian_degree_bound, lft1, lft1_for_basis, DEFAULT_MAX_WEIGHT,
};
use freediv::groebner::{ideal_basis, syzygies, Budget, ModuleElement, MonomialOrder};
use freediv::logder::{monomial_fields, structure_constants, verify_saito};
use freediv::poly::{monomials_of_weight, poly_det, Monomial};
use freediv::reduce::split_cylindrical;
use freediv::{Polynomial, Rational, Ring, SaitoBasis, VectorField};
use freediv_cli::{analyze, Flags};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn budget() -> Budget {
    Budget::unlimited()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

fn profile(f: &Polynomial, koszul: bool) -> DivisorProfile {
    classify(
        f,
        &ClassifyOptions {
            koszul,
            ..Default::default()
        },
        &budget(),
    )
    .unwrap()
}

fn c1() -> Check {
    let r = Ring::new(&["x", "y"]).unwrap();
    let f = poly(&r, "x*y*(x - y)*(x + y)");
    let rep = ft1(&f, &budget()).map_err(|e| e.to_string())?;
    ensure(rep.dimension == 1, format!("dimension {}", rep.dimension))?;
    let eq = r.format(&rep.representatives[0].equation);
    ensure(eq == "x^2*y^2", format!("representative {eq}"))?;
    Ok(format!("dim 1, f' = {eq}"))
}

fn c2() -> Check {
    let r = Ring::new(&["x", "y"]).unwrap();
    let rep = ft1(&poly(&r, "x^5 + y^4"), &budget()).map_err(|e| e.to_string())?;
    ensure(rep.dimension == 0, format!("dimension {}", rep.dimension))?;
    Ok("dim 0".into())
}

fn c3() -> Check {
    let r = Ring::new(&["x", "y"]).unwrap();
    let forms = ["x", "y", "x + y", "x - y", "x + 2*y", "x - 3*y"];
    let mut dims = Vec::new();
    for k in 1..=6 {
        let f = forms[..k]
            .iter()
            .fold(Polynomial::one(2), |acc, l| &acc * &poly(&r, l));
        let d = ft1(&f, &budget()).map_err(|e| e.to_string())?.dimension;
        let expected = k.saturating_sub(3);
        ensure(d == expected, format!("k = {k}: dimension {d}, expected {expected}"))?;
        let pc = ft1_plane_curve(&f, &budget()).map_err(|e| e.to_string())?.dimension;
        ensure(pc == d, format!("k = {k}: plane-curve shortcut gives {pc}"))?;
        dims.push(d);
    }
    Ok(format!("dims for k = 1..6: {dims:?}"))
}

fn c4() -> Check {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let f = poly(&r, "4*x^3*y^2 - 16*x^4*z + 27*y^4 - 144*x*y^2*z + 128*x^2*z^2 - 256*z^3");
    let bound = jacobian_degree_bound(&f, &[2, 3, 4], &budget()).map_err(|e| e.to_string())?;
    ensure(bound == 3, format!("Jacobian bound {bound}"))?;
    let d = ft1(&f, &budget()).map_err(|e| e.to_string())?.dimension;
    ensure(d == 0, format!("dimension {d}"))?;
    Ok("bound 3, dim 0".into())
}

fn c5() -> Check {
    for n in 2..=4 {
        let r = Ring::numbered(n);
        let f = (0..n).fold(Polynomial::one(n), |acc, i| &acc * &Polynomial::var(n, i));
        let g = ft1(&f, &budget()).map_err(|e| e.to_string())?.dimension;
        let l = lft1(&f, &budget()).map_err(|e| e.to_string())?.dimension;
        ensure(g == 0 && l == 0, format!("n = {n}: FT1 {g}, LFT1 {l}"))?;
        let p = profile(&f, true);
        ensure(p.linear, format!("n = {n}: not linear"))?;
        ensure(p.reductive == Some(true), format!("n = {n}: not reductive"))?;
        ensure(p.koszul == Some(true), format!("n = {n}: not Koszul"))?;
        let _ = r;
    }
    Ok("n = 2,3,4: FT1 = LFT1 = 0, linear, reductive, Koszul".into())
}

fn five_variable() -> (Ring, Polynomial, SaitoBasis) {
    let d = common::member("five_variable");
    let (r, f) = common::parsed(&d);
    let fields = d.saito_fields(&r).unwrap().unwrap();
    let s = SaitoBasis::new(fields, &f, &budget()).unwrap();
    (r, f, s)
}

/// Criterion 6, split into the parts that hold and the dimension claim.
fn c6() -> Check {
    let (r, f, given) = five_variable();
    let p = profile(&f, false);
    ensure(p.linear, "not linear")?;
    ensure(p.reductive == Some(false), "reductive")?;
    let witness = p.trace.as_ref().and_then(|t| t.witness.clone()).ok_or("no trace witness")?;
    ensure(witness.1 == Rational::from_integer(30.into()), format!("trace {}", witness.1))?;

    // The class with f′ = x4^4*x5, from the lift 2x3∂2 − 2x4∂3 on δ3.
    let mut lifts = vec![VectorField::zero(5); 5];
    lifts[2] = VectorField::new(vec![poly(&r, "0"), poly(&r, "2*x3"), poly(&r, "-2*x4"), poly(&r, "0"), poly(&r, "0")]);
    let eq = deformation_equation(&lifts, &given).map_err(|e| e.to_string())?;
    let target = poly(&r, "x4^4*x5");
    ensure(eq == -target.clone(), format!("f' = {}", r.format(&eq)))?;
    let lifts: Vec<VectorField> = lifts.iter().map(VectorField::neg).collect();
    let b = structure_constants(&given).map_err(|e| e.to_string())?;
    let slice = build_slice(&given, &b, &[1; 5], DEFAULT_MAX_WEIGHT, &budget()).map_err(|e| e.to_string())?;
    ensure(slice.is_cocycle(&slice.cochain(&lifts).unwrap()), "not a cocycle")?;
    ensure(is_coboundary(&lifts, &slice).unwrap().is_none(), "x4^4*x5 is a trivial class")?;
    let tj = ideal_basis(&tjurina(&f), &MonomialOrder::degrevlex(), &budget()).unwrap();
    ensure(!tj.contains_poly(&target), "x4^4*x5 lies in the Tjurina ideal")?;

    let l = lft1_for_basis(&given, &budget()).map_err(|e| e.to_string())?;
    let computed = profile(&f, false).saito.unwrap();
    let l2 = lft1_for_basis(&computed, &budget()).map_err(|e| e.to_string())?;
    let g = ft1_for_basis(&given, &[1; 5], DEFAULT_MAX_WEIGHT, &budget()).map_err(|e| e.to_string())?;
    let summary = format!(
        "linear, non-reductive, trace 30, x4^4*x5 nonzero; LFT1 = {} (given basis), {} (computed basis), FT1 = {}",
        l.dimension, l2.dimension, g.dimension
    );
    if l.dimension == 4 {
        Ok(summary)
    } else {
        Err(format!("LFT1 dimension is not 4: {summary}"))
    }
}

fn c7() -> Check {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let p = profile(&poly(&r, "(y^2 + x*z)*z"), false);
    ensure(p.linear, "not linear")?;
    ensure(p.reductive == Some(false), "reductive")?;
    let (v, t) = p.trace.and_then(|t| t.witness).ok_or("no trace witness")?;
    ensure(t == Rational::from_integer(3.into()), format!("trace {t}"))?;
    Ok(format!("witness {} with trace 3", v.format(r.names())))
}

fn c8() -> Check {
    let mut curves = 0;
    for d in common::corpus() {
        let (_, f) = common::parsed(&d);
        let split = split_cylindrical(&f);
        if split.reduced.nvars() != 2 || f.nvars() != 2 || d.label == "non_reduced" {
            continue;
        }
        let p = profile(&split.reduced, true);
        ensure(p.koszul == Some(true), format!("{} is not Koszul", d.label))?;
        curves += 1;
    }
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let not = profile(&poly(&r, "x*y*(x + y)*(y + x*z)"), true);
    ensure(not.koszul == Some(false), "xy(x+y)(y+xz) reported Koszul")?;
    let yes = profile(
        &poly(&r, "2^8*z^3 - 2^7*x^2*z^2 + 2^4*x^4*z + 2^4*3^2*x*y^2*z - 2^2*x^3*y^2 - 3^3*y^4"),
        true,
    );
    ensure(yes.koszul == Some(true), "the (2,3,4) sextic reported not Koszul")?;
    Ok(format!("{curves} plane curves Koszul; xy(x+y)(y+xz) not Koszul; sextic Koszul"))
}

fn tjurina(f: &Polynomial) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = vec![f.clone()];
    gens.extend(f.gradient().into_iter().filter(|p| !p.is_zero()));
    gens
}

fn random_weight_zero_field(rng: &mut ChaCha8Rng, weights: &[i64]) -> VectorField {
    let basis = monomial_fields(weights, 0);
    let coords: Vec<Rational> = basis
        .iter()
        .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
        .collect();
    VectorField::from_coordinates(weights.len(), &coords, &basis)
}

fn c9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut counts = [0usize; 6];
    for d in common::corpus() {
        let out = analyze(&d, &Flags::all());
        if out.exit != 0 {
            continue;
        }
        let (_, f) = common::parsed(&d);
        let g = split_cylindrical(&f).reduced;
        let p = profile(&g, false);
        let saito = p.saito.clone().unwrap();
        let label = &d.label;

        // Saito round-trip through the printed matrix.
        let r = Ring::numbered(g.nvars());
        let m = saito.matrix();
        let n = m.size();
        let cols: Vec<VectorField> = (0..n)
            .map(|j| VectorField::new((0..n).map(|i| poly(&r, &r.format(m.get(i, j)))).collect()))
            .collect();
        let check = verify_saito(&cols, &g, &budget()).unwrap();
        ensure(check.ok, format!("{label}: Saito round-trip failed"))?;
        ensure(poly_det(&m) == saito.unit() * &g, format!("{label}: det is not u*f"))?;
        counts[0] += 1;

        let report = &out.report;
        if let Some(h) = report.h0.value() {
            ensure(*h == 0, format!("{label}: H0 = {h}"))?;
            counts[1] += 1;
        }
        let Some(w) = p.weights.as_ref().map(|w| w.weights().to_vec()) else {
            continue;
        };
        let b = structure_constants(&saito).unwrap();
        let slice = build_slice(&saito, &b, &w, DEFAULT_MAX_WEIGHT, &budget()).map_err(|e| e.to_string())?;
        ensure(slice.d1().mul(slice.d0()).is_zero(), format!("{label}: d1*d0 != 0"))?;
        ensure(slice.h0() == 0, format!("{label}: H0 of the slice is {}", slice.h0()))?;
        let ft = ft1_for_basis(&saito, &w, DEFAULT_MAX_WEIGHT, &budget()).unwrap();
        let bound = jacobian_degree_bound(&g, &w, &budget()).unwrap();
        ensure(ft.dimension <= bound, format!("{label}: FT1 {} > bound {bound}", ft.dimension))?;
        counts[2] += 1;
        if p.linear {
            let l = lft1_for_basis(&saito, &budget()).unwrap();
            ensure(l.dimension == ft.dimension, format!("{label}: LFT1 {} vs FT1 {}", l.dimension, ft.dimension))?;
            counts[3] += 1;
        }
        if f.nvars() == 2 && g.nvars() == 2 {
            let embedded = g.remap(&[0, 1], 3);
            let e = ft1(&embedded, &budget()).map_err(|e| format!("{label} embedded: {e}"))?;
            ensure(e.dimension == ft.dimension, format!("{label}: embedded FT1 {}", e.dimension))?;
            counts[4] += 1;
        }
        let tj = ideal_basis(&tjurina(&g), &MonomialOrder::degrevlex(), &budget()).unwrap();
        for _ in 0..100 {
            let sigma = random_weight_zero_field(&mut rng, &w);
            let lifts = coboundary_lifts(&sigma, &saito);
            let eq = deformation_equation(&lifts, &saito).unwrap();
            ensure(tj.contains_poly(&eq), format!("{label}: coboundary outside the Tjurina ideal"))?;
        }
        counts[5] += 1;
    }
    Ok(format!(
        "Saito round-trip {}, H0 = 0 on {}, slices {}, FT1 = LFT1 on {}, embeddings {}, coboundary checks on {} members",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
    ))
}

/// `g_i = x_i^d + (terms in x_i, …, x_n of lower x_i-degree)`, a regular
/// sequence because the lex leading terms are powers of distinct variables.
fn random_regular_sequence(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Vec<Polynomial> {
    (0..r)
        .map(|i| {
            let d = rng.gen_range(1..=3u32);
            let mut g = Polynomial::monomial(Monomial::var(n, i)).pow(d);
            let mut w = vec![0i64; n];
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = if j >= i { 1 } else { 1000 };
            }
            for m in monomials_of_weight(&w, d as i64) {
                if m.exponent(i) < d && rng.gen_bool(0.4) {
                    g.add_term(m, Rational::from_integer(rng.gen_range(-2i64..=2).into()));
                }
            }
            g
        })
        .collect()
}

fn koszul_relations(g: &[Polynomial]) -> Vec<ModuleElement> {
    let r = g.len();
    let n = g[0].nvars();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut c = vec![Polynomial::zero(n); r];
            c[i] = g[j].clone();
            c[j] = -g[i].clone();
            out.push(ModuleElement::new(c));
        }
    }
    out
}

fn c10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for t in 0..10 {
        let n = 3;
        let r = 2 + t % 2;
        let g = random_regular_sequence(&mut rng, n, r);
        let syz = freediv::groebner::syzygies::of_polynomials(&g, &budget()).unwrap();
        let kos = koszul_relations(&g);
        let order = MonomialOrder::degrevlex();
        let kb = freediv::groebner::buchberger(&kos, &order, &budget()).unwrap();
        let sb = freediv::groebner::buchberger(syz.relations(), &order, &budget()).unwrap();
        ensure(syz.relations().iter().all(|s| kb.contains(s)), format!("trial {t}: syzygy outside the Koszul module"))?;
        ensure(kos.iter().all(|k| sb.contains(k)), format!("trial {t}: Koszul relation not a syzygy"))?;
        ensure(kb.s_pairs_reduce_to_zero() && sb.s_pairs_reduce_to_zero(), format!("trial {t}: S-pair residual"))?;
        let _ = syzygies(&g.iter().cloned().map(ModuleElement::from_poly).collect::<Vec<_>>(), &budget()).unwrap();
    }
    let mut checked = 0;
    for d in common::corpus() {
        let (_, f) = common::parsed(&d);
        let g = split_cylindrical(&f).reduced;
        let order = MonomialOrder::degrevlex();
        let jac = ideal_basis(&tjurina(&g), &order, &budget()).unwrap();
        ensure(jac.s_pairs_reduce_to_zero(), format!("{}: Tjurina basis residual", d.label))?;
        if let Ok(p) = classify(&g, &ClassifyOptions::default(), &budget()) {
            let w = detect_weights(&g).map(|w| w.weights().to_vec());
            let saito = p.saito.unwrap();
            let gb = saito.module_basis(&order, &budget()).unwrap();
            ensure(gb.s_pairs_reduce_to_zero(), format!("{}: Saito module residual", d.label))?;
            if let Some(w) = w {
                let e = freediv::logder::compute_der_log(&g, Some(&w), &budget()).unwrap();
                let eb = freediv::groebner::buchberger(
                    &e.iter().map(VectorField::to_element).collect::<Vec<_>>(),
                    &order,
                    &budget(),
                )
                .unwrap();
                ensure(eb.s_pairs_reduce_to_zero(), format!("{}: Der(-log D) residual", d.label))?;
            }
        }
        checked += 1;
    }
    Ok(format!("10 regular sequences match the Koszul module; S-pair residuals zero on {checked} corpus members"))
}

/// Criteria that fail for a documented reason; see README.
const KNOWN_DEVIATIONS: &[(usize, &str)] = &[(
    6,
    "three independent computations (graded slice, Chevalley-Eilenberg complex, lifting space) give LFT1 = 1",
)];

fn main() {
    let checks: [(usize, fn() -> Check); 10] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
    ];
    let mut unexpected = Vec::new();
    for (n, check) in checks {
        match check() {
            Ok(detail) => println!("criterion {n}: PASS  {detail}"),
            Err(detail) => match KNOWN_DEVIATIONS.iter().find(|(k, _)| *k == n) {
                Some((_, why)) => println!("criterion {n}: FAIL  {detail} [known deviation: {why}]"),
                None => {
                    println!("criterion {n}: FAIL  {detail}");
                    unexpected.push(n);
                }
            },
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
