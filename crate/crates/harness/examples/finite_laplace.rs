//! Numerical look at the finite Laplace transform of ξ ↦ (1 − tξ)^{−λ} H(ξ)/ξ.
//!
//! Whether this transform has a closed H-function form for general p, q is
//! open. For p = q = 1 the kernel is elementary, so the transform can be
//! computed by quadrature and set beside the generating sum it equals after
//! exchanging sum and integral. For larger p, q only the series side is
//! computable here.

use foxwright::foxwright::FoxWrightParams;
use foxwright::quadrature::{finite_laplace_detailed, KernelPQ11, QuadratureSpec};
use foxwright::series::TruncationPolicy;
use foxwright_harness::cases::fox_wright::shifted_generating_sum;

fn main() -> foxwright::Result<()> {
    let (alpha, beta, lambda, z) = (1.5, 4.0, 0.7, -0.3);
    let policy = TruncationPolicy::default();
    let outer = policy.with_max_terms(2000);

    let kernel = KernelPQ11::new(1.0, alpha, beta)?;
    let (e0, e1) = kernel.exponents();
    let spec = QuadratureSpec::default().with_exponents(e0 - 1.0, e1);
    let params = FoxWrightParams::new(vec![(alpha, 1.0)], vec![(beta, 1.0)])?;
    println!("p = q = 1, α = {alpha}, β = {beta}, λ = {lambda}, transform at s = {}", -z);
    println!("{:>6} {:>22} {:>22} {:>10}", "t", "quadrature", "generating sum", "rel diff");
    for t in [-0.6, -0.2, 0.2, 0.6, 0.9] {
        let transform = finite_laplace_detailed(
            |x, _, gap| ((1.0 - t) + t * gap).powf(-lambda) * kernel.eval_with_gap(x, gap) / x,
            1.0,
            -z,
            &spec,
        )?
        .value;
        let series = shifted_generating_sum(&params, lambda, z, t, &policy, &outer)?.value;
        println!("{t:>6} {transform:>22.15e} {series:>22.15e} {:>10.1e}", (transform - series).abs() / series.abs());
    }

    let params = FoxWrightParams::new(vec![(1.2, 1.0), (2.0, 0.5)], vec![(3.5, 1.0), (1.5, 0.5)])?;
    println!("\np = q = 2, series side only");
    for t in [-0.6, -0.2, 0.2, 0.6] {
        let series = shifted_generating_sum(&params, lambda, z, t, &policy, &outer)?;
        println!("{t:>6} {:>22.15e} ({} terms)", series.value, series.terms_used);
    }
    Ok(())
}
