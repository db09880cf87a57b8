//! Dressed-state energies and mixing angles of the two-level blocks.

use jc_entropy::dressed::{eigenvalues, ground_ladder_energy, mixing_angle, rabi_parameters, ModelParams};

fn main() -> jc_entropy::Result<()> {
    let p = ModelParams::new(1.0, 0.5, 2, 0.3)?;
    let (beta1, beta2) = p.stark_shifts();
    println!("k = {}, delta = {}, R = {}  ->  beta1 = {beta1:.4}, beta2 = {beta2:.4}", p.k, p.delta, p.stark_r);

    println!("\n{:>3} {:>10} {:>10} {:>10} {:>10} {:>8}", "n", "nu", "mu", "E+", "E-", "theta");
    for n in 0..8 {
        let rd = rabi_parameters(&p, n);
        let (ep, em) = eigenvalues(&p, n);
        println!("{n:3} {:10.5} {:10.5} {ep:10.5} {em:10.5} {:8.4}", rd.nu, rd.mu, mixing_angle(&rd));
    }

    println!("\nuncoupled ground levels:");
    for s in 0..p.k {
        println!("  |{s}, g>  E = {:.5}", ground_ladder_energy(&p, s)?);
    }
    Ok(())
}
