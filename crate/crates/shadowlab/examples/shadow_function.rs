//! Cascade representations and the shadow function F_k.

use shadowlab::kknum::{
    check_long_interval, invert_binomial, k_binomial_representation, long_interval_threshold,
    shadow_function, default_eps,
};
use shadowlab::Result;

fn main() -> Result<()> {
    // every positive integer has a unique k-binomial (cascade) form
    for m in [9u64, 17, 100] {
        let repr = k_binomial_representation(m, 3)?;
        println!("{m} = {repr}");
    }

    // F_k drops each lower index by one; F_3(17) = C(5,2)+C(4,1)+C(1,0)
    println!();
    for m in 1..=20u64 {
        print!("F_3({m}) = {:<3}", shadow_function(m, 3));
        if m % 5 == 0 {
            println!();
        }
    }

    // the ratio F_k(m)/m stays at or above k/(a-k+1) for all m up to the
    // long-interval threshold
    println!();
    let (a, k) = (4u64, 3u32);
    let threshold = long_interval_threshold(a, k)?;
    println!("threshold for a={a}, k={k}: {threshold}");
    for m in 1..=threshold {
        let (inside, (ratio, bound)) = check_long_interval(m, a, k)?;
        println!("  m={m}: F/m = {ratio} >= {bound} (inside window: {inside})");
        assert!(ratio >= bound);
    }

    // real-argument inversion brackets the x with C(x, k-1) = d
    println!();
    let q = invert_binomial(9, 2, &default_eps())?;
    println!(
        "C(x, 2) = 9 has x in [{}, {} + {}], C at the endpoint: {}",
        q.x,
        q.x,
        q.eps,
        q.value()
    );
    Ok(())
}
