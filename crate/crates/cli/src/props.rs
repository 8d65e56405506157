//! Seeded randomized algebra checks runnable from `verify --props`.

use overparity::fps_gf2::BitSeries;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const N: usize = 256;
const INSTANCES: usize = 50;

#[derive(Debug, Serialize)]
pub struct PropOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub pass: bool,
}

fn random_series(rng: &mut ChaCha8Rng, unit: bool) -> BitSeries {
    let mut support: Vec<usize> = (1..N).filter(|_| rng.gen_bool(0.5)).collect();
    if unit || rng.gen_bool(0.5) {
        support.push(0);
    }
    BitSeries::from_support(support, N)
}

pub fn run(seed: u64) -> Vec<PropOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut check = |name: &'static str, mut f: Box<dyn FnMut(&mut ChaCha8Rng) -> bool>| {
        let pass = (0..INSTANCES).all(|_| f(&mut rng));
        out.push(PropOutcome { name, instances: INSTANCES, pass });
    };

    check(
        "mul-commutes",
        Box::new(|rng| {
            let a = random_series(rng, false);
            let b = random_series(rng, false);
            a.mul(&b).unwrap() == b.mul(&a).unwrap()
        }),
    );
    check(
        "mul-distributes",
        Box::new(|rng| {
            let a = random_series(rng, false);
            let b = random_series(rng, false);
            let c = random_series(rng, false);
            a.mul(&b.add(&c).unwrap()).unwrap()
                == a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        }),
    );
    check(
        "frobenius-square",
        Box::new(|rng| {
            let a = random_series(rng, false);
            a.square() == a.mul(&a).unwrap()
        }),
    );
    check(
        "inverse-round-trip",
        Box::new(|rng| {
            let a = random_series(rng, true);
            a.mul(&a.inverse().unwrap()).unwrap() == BitSeries::one(N)
        }),
    );
    check(
        "dissection-complete",
        Box::new(|rng| {
            let a = random_series(rng, false);
            let m = N - 1;
            let even = a.extract(2, 0).unwrap().magnify(2).retrunc(m).unwrap();
            let odd = a.extract(2, 1).unwrap().magnify(2).shift(1).retrunc(m).unwrap();
            even.add(&odd).unwrap() == a.retrunc(m).unwrap()
        }),
    );
    out
}
