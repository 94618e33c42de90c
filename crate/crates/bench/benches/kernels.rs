use criterion::{criterion_group, criterion_main, Criterion};
use freediv::groebner::{ideal_basis, Budget, MonomialOrder};
use freediv::logder::compute_der_log;
use freediv::cohomology::{ft1, lft1};
use freediv::{Polynomial, Ring};

fn parse(vars: &[&str], f: &str) -> Polynomial {
    Ring::new(vars).unwrap().parse(f).unwrap()
}

fn kernels(c: &mut Criterion) {
    let budget = Budget::unlimited();
    let xyz = ["x", "y", "z"];
    let gens: Vec<Polynomial> = ["x^2*y - z^3", "x*y*z - y^2", "x^3 + y*z^2 - x*z"]
        .iter()
        .map(|s| parse(&xyz, s))
        .collect();
    c.bench_function("buchberger_degrevlex", |b| {
        b.iter(|| ideal_basis(&gens, &MonomialOrder::degrevlex(), &budget).unwrap())
    });

    let four_lines = parse(&["x", "y"], "x*y*(x - y)*(x + y)");
    let swallowtail = parse(
        &["x", "y", "z"],
        "16*x^4*z - 4*x^3*y^2 - 128*x^2*z^2 + 144*x*y^2*z - 27*y^4 + 256*z^3",
    );
    c.bench_function("der_log_swallowtail", |b| {
        b.iter(|| compute_der_log(&swallowtail, Some(&[2, 3, 4]), &budget))
    });
    c.bench_function("ft1_four_lines", |b| b.iter(|| ft1(&four_lines, &budget).unwrap()));

    let five = parse(
        &["x1", "x2", "x3", "x4", "x5"],
        "x5*(x4^4 - 2*x5*x4^2*x3 + x5^2*x3^2 + 2*x5^2*x4*x2 - 2*x5^3*x1)",
    );
    c.bench_function("lft1_five_variable", |b| b.iter(|| lft1(&five, &budget).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels
}
criterion_main!(benches);
