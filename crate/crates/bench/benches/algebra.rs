use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use qloc_core::flag_proj::{check_braided_commutativity_exhaustive, RepRing};
use qloc_core::oq_dq::{sections, Dq, Oq};
use qloc_core::weight_modules::{ChiContext, VermaModule};
use qloc_core::{RootDatum, Uq, Weight, WeightCharacter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn normal_form(c: &mut Criterion) {
    let uq = Uq::new(RootDatum::a2());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("a2 normal form, words of length 6", |b| {
        b.iter_batched(|| uq.random_word(&mut rng, 6), |w| uq.normal_form(&w), BatchSize::SmallInput)
    });
    let x = uq.multiply(&uq.e_root(1), &uq.f_root(1));
    c.bench_function("a2 coproduct of E12*F12", |b| b.iter(|| uq.coproduct(&x)));
}

fn modules(c: &mut Criterion) {
    let uq = Uq::new(RootDatum::a2());
    c.bench_function("a2 verma weight spaces, depth 4", |b| {
        b.iter(|| {
            VermaModule::new(&uq, WeightCharacter::Integral(Weight::new(1, 1)), 4)
                .weight_space_dims()
                .unwrap()
        })
    });
    let ctx = ChiContext::new(&uq);
    c.bench_function("a2 central character", |b| {
        b.iter(|| ctx.chi(&WeightCharacter::Integral(Weight::new(2, -1))))
    });
}

fn coordinate_ring(c: &mut Criterion) {
    let oq = Oq::new();
    c.bench_function("sections of O_q(3)", |b| b.iter(|| sections(&oq, 3, 5).unwrap()));
    let dq = Dq::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    c.bench_function("smash product of random pairs", |b| {
        b.iter_batched(
            || (dq.random_element(&mut rng, 2), dq.random_element(&mut rng, 2)),
            |(x, y)| dq.multiply(&x, &y),
            BatchSize::SmallInput,
        )
    });
}

fn braided(c: &mut Criterion) {
    let ring = RepRing::standard(RootDatum::a1(), 6).unwrap();
    let mut g = c.benchmark_group("braided");
    g.sample_size(10);
    g.bench_function("a1 exhaustive to degree 3", |b| {
        b.iter(|| check_braided_commutativity_exhaustive(&ring, 3).unwrap())
    });
    g.finish();
}

criterion_group!(benches, normal_form, modules, coordinate_ring, braided);
criterion_main!(benches);
