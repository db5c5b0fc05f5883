use ndarray::Array2;
use std::time::Instant;

fn bench(m: usize, k: usize, n: usize, reps: usize) {
    let a = Array2::<f64>::from_shape_fn((m, k), |(i, j)| ((i * 31 + j * 7) % 13) as f64 * 0.1);
    let b = Array2::<f64>::from_shape_fn((k, n), |(i, j)| ((i * 17 + j * 3) % 11) as f64 * 0.1);
    let t = Instant::now();
    let mut acc = 0.0;
    for _ in 0..reps {
        let c = a.dot(&b);
        acc += c[[0, 0]];
    }
    let dt = t.elapsed().as_secs_f64();
    let flops = 2.0 * (m * k * n * reps) as f64 / dt / 1e9;
    println!("{m}x{k}x{n} x{reps}: {:.3}s  {flops:.2} GFLOP/s (acc {acc:.1})", dt);
}

fn main() {
    bench(992, 64, 64, 200);
    bench(992, 64, 128, 200);
    bench(992, 128, 64, 200);
    bench(60, 64, 64, 2000);
    bench(62, 62, 64, 2000);
    bench(60, 16, 64, 2000);
    bench(512, 512, 512, 20);
}
