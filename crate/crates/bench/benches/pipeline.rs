//! Benchmarks for the hot paths: transforms, diffraction, relator
//! enumeration, and the end-to-end solve pipeline.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use diffrakt_core::abelian::{Group, GroupFunction};
use diffrakt_core::density::{bragg_spectrum, diffraction, Density};
use diffrakt_core::inverse::{extract_phase_from_density, solve_family};
use diffrakt_core::relators::{canonical_basis, relator_lattice, relators_up_to};
use diffrakt_core::turn::Turn;
use diffrakt_core::C64;

fn random_function(g: &Group, seed: u64) -> GroupFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals: Vec<C64> = (0..g.order())
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    GroupFunction::new(g, vals).unwrap()
}

fn random_density(g: &Group, seed: u64) -> Density {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w: Vec<f64> = (0..g.order()).map(|_| rng.gen_range(0.0..4.0)).collect();
    Density::from_real(g, &w).unwrap()
}

fn bench_dft(c: &mut Criterion) {
    let g = Group::new(&[16, 16]).unwrap();
    let f = random_function(&g, 11);
    c.bench_function("dft order 256", |b| b.iter(|| black_box(&f).dft()));
}

fn bench_diffraction(c: &mut Criterion) {
    let g = Group::new(&[256]).unwrap();
    let rho = random_density(&g, 12);
    c.bench_function("diffraction order 256", |b| {
        b.iter(|| diffraction(black_box(&rho), 1e-9))
    });
}

fn bench_relators(c: &mut Criterion) {
    // sparse support on Z/6: one free pair plus zero
    let g6 = Group::new(&[6]).unwrap();
    let rho6 = Density::from_real(&g6, &[11.0, 25.0, 42.0, 45.0, 31.0, 14.0]).unwrap();
    let lat6 = relator_lattice(&canonical_basis(
        &bragg_spectrum(&diffraction(&rho6, 1e-9)).unwrap(),
    ))
    .unwrap();
    c.bench_function("relators Z/6 length 8", |b| {
        b.iter(|| relators_up_to(black_box(&lat6), 8).unwrap())
    });

    // full dual of Z/12: five free pairs and one order-two generator
    let g12 = Group::new(&[12]).unwrap();
    let mut comb = vec![0.0; 12];
    comb[0] = 12.0;
    let rho12 = Density::from_real(&g12, &comb).unwrap();
    let lat12 = relator_lattice(&canonical_basis(
        &bragg_spectrum(&diffraction(&rho12, 1e-9)).unwrap(),
    ))
    .unwrap();
    c.bench_function("relators Z/12 length 3", |b| {
        b.iter(|| relators_up_to(black_box(&lat12), 3).unwrap())
    });
}

fn bench_solve(c: &mut Criterion) {
    let g = Group::new(&[48]).unwrap();
    let mut comb = vec![0.0; 48];
    comb[0] = 48.0;
    let rho = Density::from_real(&g, &comb).unwrap();
    c.bench_function("solve pipeline order 48", |b| {
        b.iter(|| {
            let omega = diffraction(black_box(&rho), 1e-9);
            let family = solve_family(&omega).unwrap();
            let angles: Vec<Turn> = (0..family.p())
                .map(|i| Turn::exact(i as i64, 97))
                .collect();
            let signs = vec![1i8; family.q()];
            let sample = family.sample(&angles, &signs).unwrap();
            extract_phase_from_density(&sample, 1e-9).unwrap()
        })
    });
}

criterion_group!(benches, bench_dft, bench_diffraction, bench_relators, bench_solve);
criterion_main!(benches);
