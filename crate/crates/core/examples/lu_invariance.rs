//! Single-qubit determinants before and after random local unitaries.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperent::entropy::entropic_measure;
use hyperent::fixtures;
use hyperent::rational::to_f64;
use hyperent::state::{
    apply_local_unitary, build_state, det2, random_unitary, reduced_density_float, to_amplitudes,
};

fn main() -> hyperent::Result<()> {
    let g = fixtures::fig1a();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let before = to_amplitudes(&build_state(&g)?);
    let mut after = before.clone();
    for t in 1..=g.n() {
        after = apply_local_unitary(&after, t, &random_unitary(&mut rng))?;
    }
    for t in 1..=g.n() {
        let d0 = det2(&reduced_density_float(&before, t)?).re;
        let d1 = det2(&reduced_density_float(&after, t)?).re;
        let exact = entropic_measure(&g, t)?;
        println!(
            "t={t} exact={exact} before={d0:.12} after={d1:.12} exact_f64={:.12}",
            to_f64(&exact)
        );
    }
    Ok(())
}
