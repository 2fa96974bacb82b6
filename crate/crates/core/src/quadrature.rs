//! Gauss-Laguerre quadrature for `int_0^inf g(t) e^{-t} dt`.

/// Nodes and weights of the `m`-point rule, found by Newton iteration on the
/// Laguerre polynomial `L_m`.
pub fn gauss_laguerre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let mf = m as f64;
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * mf),
            1 => z + 15.0 / (1.0 + 2.5 * mf),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
            }
        };
        let mut p2 = 0.0;
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            p2 = 0.0;
            for j in 1..=m {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf - 1.0 - z) * p2 - (jf - 1.0) * p3) / jf;
            }
            pp = mf * (p1 - p2) / z;
            let step = p1 / pp;
            z -= step;
            if step.abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        weights[i] = -1.0 / (pp * mf * p2);
    }
    (nodes, weights)
}

/// Applies the rule to `g`.
pub fn laguerre_integral<F: Fn(f64) -> num::Complex<f64>>(m: usize, g: F) -> num::Complex<f64> {
    let (nodes, weights) = gauss_laguerre(m);
    nodes.iter().zip(&weights).map(|(x, w)| g(*x) * *w).sum()
}
