//! From-scratch reference implementation used as a test oracle.
//!
//! Row-major `Vec<Complex64>` matrices, explicit index loops, and a Taylor
//! scaling-and-squaring exponential. Nothing here calls into `mqdyn`'s
//! numerical paths or LAPACK.

#![allow(dead_code)]

use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct Mat {
    pub d: usize,
    pub a: Vec<Complex64>,
}

impl Mat {
    pub fn zeros(d: usize) -> Mat {
        Mat { d, a: vec![Complex64::new(0.0, 0.0); d * d] }
    }

    pub fn identity(d: usize) -> Mat {
        let mut m = Mat::zeros(d);
        for i in 0..d {
            m.a[i * d + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        self.a[r * self.d + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * self.d + c] = v;
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let d = self.d;
        let mut out = Mat::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out.a[i * d + j] += x * o.a[k * d + j];
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { d: self.d, a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Mat {
        Mat { d: self.d, a: self.a.iter().map(|x| x * s).collect() }
    }

    pub fn dagger(&self) -> Mat {
        let mut out = Mat::zeros(self.d);
        for r in 0..self.d {
            for c in 0..self.d {
                out.set(c, r, self.at(r, c).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.d).map(|i| self.at(i, i)).sum()
    }

    pub fn one_norm(&self) -> f64 {
        (0..self.d)
            .map(|c| (0..self.d).map(|r| self.at(r, c).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Number of down spins, counted bit by bit.
pub fn downs(index: usize, n: usize) -> i32 {
    (0..n).filter(|b| (index >> b) & 1 == 1).count() as i32
}

pub fn chain_coupling(j: usize, k: usize) -> f64 {
    1.0 / (j as f64 - k as f64).abs().powi(3)
}

pub fn ring_coupling(j: usize, k: usize, n: usize) -> f64 {
    let pi = std::f64::consts::PI;
    let ratio = (pi / n as f64).sin() / (pi * (j as f64 - k as f64).abs() / n as f64).sin();
    ratio.powi(3)
}

/// `-1/4 Σ D_jk (I_j^+ I_k^+ + h.c.)` by scanning every matrix element.
pub fn h_mq(n: usize, coupling: impl Fn(usize, usize) -> f64) -> Mat {
    let d = 1 << n;
    let mut h = Mat::zeros(d);
    for r in 0..d {
        for s in 0..d {
            let mut v = 0.0;
            for j in 1..=n {
                for k in j + 1..=n {
                    let bj = 1 << (j - 1);
                    let bk = 1 << (k - 1);
                    let others = !(bj | bk);
                    if r & others != s & others {
                        continue;
                    }
                    let r_up = r & (bj | bk) == 0;
                    let s_up = s & (bj | bk) == 0;
                    let r_down = r & (bj | bk) == bj | bk;
                    let s_down = s & (bj | bk) == bj | bk;
                    if (r_up && s_down) || (r_down && s_up) {
                        v += -0.25 * coupling(j, k);
                    }
                }
            }
            h.set(r, s, Complex64::new(v, 0.0));
        }
    }
    h
}

pub fn iz(n: usize) -> Mat {
    let d = 1 << n;
    let mut m = Mat::zeros(d);
    for i in 0..d {
        m.set(i, i, Complex64::new(n as f64 / 2.0 - downs(i, n) as f64, 0.0));
    }
    m
}

pub fn thermal(n: usize, b: f64) -> Mat {
    let d = 1 << n;
    let w: Vec<f64> = (0..d).map(|i| (b * (n as f64 / 2.0 - downs(i, n) as f64)).exp()).collect();
    let z: f64 = w.iter().sum();
    let mut m = Mat::zeros(d);
    for i in 0..d {
        m.set(i, i, Complex64::new(w[i] / z, 0.0));
    }
    m
}

/// `exp(A)` by scaling, a 40-term Taylor series and repeated squaring.
pub fn expm(a: &Mat) -> Mat {
    let norm = a.one_norm();
    let mut squarings = 0;
    while norm / 2f64.powi(squarings) > 0.25 {
        squarings += 1;
    }
    let scaled = a.scale(Complex64::new(2f64.powi(-squarings), 0.0));
    let mut term = Mat::identity(a.d);
    let mut sum = Mat::identity(a.d);
    for k in 1..=40 {
        term = term.mul(&scaled).scale(Complex64::new(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// `exp(-iτH)`.
pub fn propagator(h: &Mat, tau: f64) -> Mat {
    expm(&h.scale(Complex64::new(0.0, -tau)))
}

/// Entries of coherence order `k` (`m(r) - m(s) = downs(s) - downs(r)`).
pub fn mask_order(a: &Mat, k: i32, n: usize) -> Mat {
    let mut out = Mat::zeros(a.d);
    for r in 0..a.d {
        for s in 0..a.d {
            if downs(s, n) - downs(r, n) == k {
                out.set(r, s, a.at(r, s));
            }
        }
    }
    out
}

/// Partial trace onto sites `(m, n)`, pair index `2·[m down] + [n down]`.
pub fn partial_trace(a: &Mat, m: usize, n: usize) -> Mat {
    let bm = 1 << (m - 1);
    let bn = 1 << (n - 1);
    let env = !(bm | bn);
    let idx = |i: usize| 2 * usize::from(i & bm != 0) + usize::from(i & bn != 0);
    let mut out = Mat::zeros(4);
    for r in 0..a.d {
        for s in 0..a.d {
            if r & env == s & env {
                let (p, q) = (idx(r), idx(s));
                out.set(p, q, out.at(p, q) + a.at(r, s));
            }
        }
    }
    out
}

/// Everything a pipeline run reports at one `τ`, computed from scratch.
pub struct OracleStep {
    /// `J_k` for `k = -N..=N` (index `k + N`).
    pub integrated: Vec<Complex64>,
    /// `J_k^{mn}` for `k ∈ {-2, 0, 2}` per requested pair.
    pub reduced: Vec<[Complex64; 3]>,
}

pub fn oracle_step(n: usize, h: &Mat, rho_eq: &Mat, tau: f64, pairs: &[(usize, usize)]) -> OracleStep {
    let u = propagator(h, tau);
    let ud = u.dagger();
    let rho = u.mul(rho_eq).mul(&ud);
    let rhoz = u.mul(&iz(n)).mul(&ud);
    let ni = n as i32;
    let integrated = (-ni..=ni)
        .map(|k| rho.mul(&mask_order(&rhoz, k, n)).trace())
        .collect();
    let reduced = pairs
        .iter()
        .map(|&(m, q)| {
            let rp = partial_trace(&rho, m, q);
            let mut out = [Complex64::new(0.0, 0.0); 3];
            for (slot, k) in [-2, 0, 2].into_iter().enumerate() {
                out[slot] = rp.mul(&partial_trace(&mask_order(&rhoz, k, n), m, q)).trace();
            }
            out
        })
        .collect();
    OracleStep { integrated, reduced }
}
