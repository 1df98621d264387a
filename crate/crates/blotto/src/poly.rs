//! Real roots of polynomials up to degree 3, by discriminant classification.
//!
//! Coefficients follow `c[0] + c[1] x + c[2] x^2 + c[3] x^3`. Roots are
//! polished with a few Newton steps on the original polynomial, so closed-form
//! cancellation does not degrade accuracy near multiple roots.

/// All real roots of `c0 + c1 x`, `.. + c2 x^2`, `.. + c3 x^3`.
///
/// Exact zero leading coefficients degrade the degree; near-zero ones do not
/// (the cubic formulas stay stable because they are polished afterwards).
pub fn real_roots(c0: f64, c1: f64, c2: f64, c3: f64) -> Vec<f64> {
    let mut roots = if c3 == 0.0 {
        if c2 == 0.0 {
            if c1 == 0.0 {
                Vec::new()
            } else {
                vec![-c0 / c1]
            }
        } else {
            quadratic_roots(c0, c1, c2)
        }
    } else if c0 == 0.0 {
        // x * (c1 + c2 x + c3 x^2); the zero root is reported too.
        let mut r = quadratic_roots(c1, c2, c3);
        r.push(0.0);
        r
    } else {
        cubic_roots(c0, c1, c2, c3)
    };
    for r in roots.iter_mut() {
        *r = newton_polish(*r, c0, c1, c2, c3);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

fn quadratic_roots(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    // Citardauq form for the small root avoids cancellation.
    let q = -0.5 * (c1 + c1.signum() * sq);
    if q == 0.0 {
        return vec![0.0, 0.0];
    }
    vec![q / c2, c0 / q]
}

fn cubic_roots(c0: f64, c1: f64, c2: f64, c3: f64) -> Vec<f64> {
    // Monic: x^3 + a x^2 + b x + c, then depressed: t^3 + p t + q, x = t - a/3.
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    let disc = -4.0 * p * p * p - 27.0 * q * q;
    if disc > 0.0 {
        // Three real roots; trigonometric method. disc > 0 forces p < 0.
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift)
            .collect()
    } else if disc == 0.0 {
        if p == 0.0 {
            vec![-shift, -shift, -shift]
        } else {
            // Double root and a simple root.
            let u = 3.0 * q / p;
            vec![u - shift, -u / 2.0 - shift, -u / 2.0 - shift]
        }
    } else {
        // One real root; Cardano with a cancellation-safe branch.
        let r = if p < 0.0 {
            let m = 2.0 * (-p / 3.0).sqrt();
            let arg = 3.0 * q.abs() / (-p * m);
            let t = -q.signum() * m * (arg.acosh() / 3.0).cosh();
            t
        } else {
            let m = 2.0 * (p / 3.0).sqrt();
            let arg = 3.0 * q / (p * m);
            -m * (arg.asinh() / 3.0).sinh()
        };
        vec![r - shift]
    }
}

fn newton_polish(mut x: f64, c0: f64, c1: f64, c2: f64, c3: f64) -> f64 {
    for _ in 0..3 {
        let f = c0 + x * (c1 + x * (c2 + x * c3));
        let df = c1 + x * (2.0 * c2 + x * 3.0 * c3);
        if df == 0.0 {
            break;
        }
        let step = f / df;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 1e-16 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(x: f64, c: [f64; 4]) -> f64 {
        c[0] + x * (c[1] + x * (c[2] + x * c[3]))
    }

    #[test]
    fn known_cubics() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let r = real_roots(-6.0, 11.0, -6.0, 1.0);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        // x^3 + x + 1: single real root
        let r = real_roots(1.0, 1.0, 0.0, 1.0);
        assert_eq!(r.len(), 1);
        assert!(eval(r[0], [1.0, 1.0, 0.0, 1.0]).abs() < 1e-12);
    }

    #[test]
    fn degenerate_degrees() {
        assert_eq!(real_roots(-2.0, 1.0, 0.0, 0.0), vec![2.0]);
        let r = real_roots(2.0, -3.0, 1.0, 0.0);
        assert_eq!(r, vec![1.0, 2.0]);
        // gamma^2 (a3 gamma + a2) shape used by the equilibrium solver
        let r = real_roots(0.0, 0.0, -1.0, 2.0);
        assert!(r.contains(&0.0));
        assert!(r.iter().any(|x| (x - 0.5).abs() < 1e-15));
    }

    #[test]
    fn random_cubics_all_roots_found() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let roots: Vec<f64> = (0..3).map(|_| rng.random_range(-5.0..5.0)).collect();
            let scale: f64 = rng.random_range(0.1..10.0);
            // Expand scale*(x-r0)(x-r1)(x-r2)
            let (r0, r1, r2) = (roots[0], roots[1], roots[2]);
            let c3 = scale;
            let c2 = -scale * (r0 + r1 + r2);
            let c1 = scale * (r0 * r1 + r0 * r2 + r1 * r2);
            let c0 = -scale * r0 * r1 * r2;
            let found = real_roots(c0, c1, c2, c3);
            assert_eq!(found.len(), 3);
            let mut expect = vec![r0, r1, r2];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (f, e) in found.iter().zip(expect) {
                assert!(
                    (f - e).abs() < 1e-7 * (1.0 + e.abs()),
                    "root {f} vs {e}"
                );
            }
        }
    }
}
