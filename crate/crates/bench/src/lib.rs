//! Seeded instances shared by the benchmarks.

use enrich_core::chain::ChainComplex;
use enrich_core::dg::FunctorComplex;
use enrich_core::enriched::VCategory;
use enrich_core::gen;
use enrich_core::linalg::RingSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn complexes(
    ring: &RingSpec,
    seed: u64,
    len: usize,
    rank: usize,
) -> (ChainComplex, ChainComplex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let x = gen::random_complex(&mut rng, ring, len, rank);
        let y = gen::random_complex(&mut rng, ring, len, rank);
        if x.total_rank() >= len * rank / 2 && y.total_rank() >= len * rank / 2 {
            return (x, y);
        }
    }
}

pub fn functor_complex(ring: &RingSpec, seed: u64, objects: usize) -> (VCategory, FunctorComplex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cat = gen::random_thin_category(&mut rng, ring, objects);
    let x = gen::random_functor_complex(&mut rng, &cat, 3, 3).expect("random functor complex");
    (cat, x)
}
