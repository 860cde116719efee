//! Average distance against network size: logarithmic growth for
//! small-world networks, double-logarithmic for scale-free ones.
//!
//! ```bash
//! cargo run --example scaling_laws
//! ```

use netcompress::generators::{ba_network, ws_network};
use netcompress::spectral::{fit_log, fit_loglog, ultra_small_world_gap};

fn main() {
    let sizes = [100usize, 200, 400, 800];
    let seeds: Vec<u64> = (0..10).collect();

    let mut ws_means = Vec::new();
    let mut ba_means = Vec::new();
    println!("   n     ws mean D   ba mean D");
    for &n in &sizes {
        let mut ws_sum = 0.0;
        let mut ba_sum = 0.0;
        for &seed in &seeds {
            ws_sum += ws_network(n, 4, 0.5, seed)
                .expect("valid spec")
                .average_distance()
                .expect("connected");
            ba_sum += ba_network(n, 4, seed)
                .expect("valid spec")
                .average_distance()
                .expect("connected");
        }
        ws_means.push(ws_sum / seeds.len() as f64);
        ba_means.push(ba_sum / seeds.len() as f64);
        println!(
            "{n:>5}     {:>8.4}    {:>8.4}",
            ws_means.last().unwrap(),
            ba_means.last().unwrap()
        );
    }

    let xs: Vec<f64> = sizes.iter().map(|&n| n as f64).collect();
    let ws_fit = fit_log(&xs, &ws_means).expect("fit");
    let ba_fit = fit_loglog(&xs, &ba_means).expect("fit");
    println!(
        "\nws: D ~ {:.3} ln n + {:.3}   (R^2 = {:.4})",
        ws_fit.slope, ws_fit.intercept, ws_fit.r_squared
    );
    println!(
        "ba: D ~ {:.3} ln ln n + {:.3} (R^2 = {:.4})",
        ba_fit.slope, ba_fit.intercept, ba_fit.r_squared
    );
    println!(
        "\nultra-small-world gap at n = 300: {:.4}",
        ultra_small_world_gap(300, &seeds).expect("generators")
    );
}
