use std::time::Instant;

use linarr::arrangement::random_arrangement;
use linarr::syzygy;

fn main() {
    for d in [5, 6, 7, 8] {
        let a = random_arrangement(d, 1, 3).unwrap();
        let f = syzygy::defining_polynomial(&a);

        let t = Instant::now();
        let tau = syzygy::tau_algebraic(&f).unwrap();
        let tau_time = t.elapsed();

        let t = Instant::now();
        let s = syzygy::analyze(&a).unwrap();
        let analyze_time = t.elapsed();

        println!(
            "d={d}: tau={tau} ({tau_time:?}), analyze tau={} gens={:?} ({analyze_time:?})",
            s.tau, s.gen_degrees
        );
    }
}
