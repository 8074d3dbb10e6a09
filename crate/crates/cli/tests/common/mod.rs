#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homlie::io::serialize_algebra;
use homlie::HomLieAlgebra;
use serde_json::Value;

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().expect("binary runs")
}

pub fn json_report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

pub fn write_doc(dir: &Path, a: &HomLieAlgebra) -> PathBuf {
    let path = dir.join(format!("{}.json", a.name()));
    std::fs::write(&path, serialize_algebra(a)).unwrap();
    path
}

/// Dense brute-force evaluation straight from the JSON document, sharing no
/// code with the library's tensor or checks.
pub mod oracle {
    use homlie::io::serialize_algebra;
    use homlie::linalg::parse_rat;
    use homlie::{HomLieAlgebra, Mat, Rat};
    use num_traits::Zero;
    use serde_json::Value;

    pub struct Table {
        n: usize,
        /// c[i][j][k]: coefficient of e_k in [e_i, e_j], both orders filled.
        c: Vec<Vec<Vec<Rat>>>,
        /// t[r][c]: column c is T(e_c).
        t: Vec<Vec<Rat>>,
        b: Option<Vec<Vec<Rat>>>,
    }

    fn grid(v: &Value) -> Vec<Vec<Rat>> {
        v.as_array()
            .unwrap()
            .iter()
            .map(|row| row.as_array().unwrap().iter().map(|x| parse_rat(x.as_str().unwrap()).unwrap()).collect())
            .collect()
    }

    impl Table {
        pub fn from_algebra(a: &HomLieAlgebra) -> Self {
            let doc: Value = serde_json::from_str(&serialize_algebra(a)).unwrap();
            let n = doc["dim"].as_u64().unwrap() as usize;
            let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
            for entry in doc["bracket"].as_array().unwrap() {
                let i = entry["i"].as_u64().unwrap() as usize;
                let j = entry["j"].as_u64().unwrap() as usize;
                for pair in entry["coeffs"].as_array().unwrap() {
                    let k = pair[0].as_u64().unwrap() as usize;
                    let x = parse_rat(pair[1].as_str().unwrap()).unwrap();
                    c[i][j][k] = x.clone();
                    c[j][i][k] = -x;
                }
            }
            let t = if doc["twist"].is_null() {
                (0..n).map(|r| (0..n).map(|s| if r == s { Rat::from_integer(1.into()) } else { Rat::zero() }).collect()).collect()
            } else {
                grid(&doc["twist"])
            };
            let b = (!doc["form"].is_null()).then(|| grid(&doc["form"]));
            Table { n, c, t, b }
        }

        pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
            let mut out = vec![Rat::zero(); self.n];
            for i in 0..self.n {
                if x[i].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if y[j].is_zero() {
                        continue;
                    }
                    let w = &x[i] * &y[j];
                    for k in 0..self.n {
                        out[k] += &w * &self.c[i][j][k];
                    }
                }
            }
            out
        }

        pub fn twist(&self, x: &[Rat]) -> Vec<Rat> {
            (0..self.n).map(|r| (0..self.n).map(|s| &self.t[r][s] * &x[s]).sum()).collect()
        }

        fn form(&self, x: &[Rat], y: &[Rat]) -> Rat {
            let b = self.b.as_ref().expect("form present");
            let mut s = Rat::zero();
            for i in 0..self.n {
                for j in 0..self.n {
                    s += &x[i] * &b[i][j] * &y[j];
                }
            }
            s
        }

        fn add3(a: Vec<Rat>, b: Vec<Rat>, c: Vec<Rat>) -> Vec<Rat> {
            a.into_iter().zip(b).zip(c).map(|((a, b), c)| a + b + c).collect()
        }

        pub fn jacobiator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
            Self::add3(
                self.bracket(x, &self.bracket(y, z)),
                self.bracket(y, &self.bracket(z, x)),
                self.bracket(z, &self.bracket(x, y)),
            )
        }

        pub fn hom_jacobiator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
            Self::add3(
                self.bracket(&self.twist(x), &self.bracket(y, z)),
                self.bracket(&self.twist(y), &self.bracket(z, x)),
                self.bracket(&self.twist(z), &self.bracket(x, y)),
            )
        }

        fn unit(&self, i: usize) -> Vec<Rat> {
            let mut v = vec![Rat::zero(); self.n];
            v[i] = Rat::from_integer(1.into());
            v
        }

        fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
            let n = self.n;
            (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        }

        pub fn first_hom_jacobi_failure(&self) -> Option<(usize, usize, usize)> {
            self.triples().find(|&(i, j, k)| {
                self.hom_jacobiator(&self.unit(i), &self.unit(j), &self.unit(k)).iter().any(|x| !x.is_zero())
            })
        }

        pub fn first_jacobi_failure(&self) -> Option<(usize, usize, usize)> {
            self.triples().find(|&(i, j, k)| {
                self.jacobiator(&self.unit(i), &self.unit(j), &self.unit(k)).iter().any(|x| !x.is_zero())
            })
        }

        pub fn first_equivariance_failure(&self) -> Option<(usize, usize)> {
            let n = self.n;
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
                let (x, y) = (self.unit(i), self.unit(j));
                self.twist(&self.bracket(&x, &y)) != self.bracket(&self.twist(&x), &y)
            })
        }

        pub fn first_invariance_failure(&self) -> Option<(usize, usize, usize)> {
            self.triples().find(|&(i, j, k)| {
                let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                self.form(&self.bracket(&x, &y), &z) != self.form(&x, &self.bracket(&y, &z))
            })
        }

        pub fn form_is_symmetric_and_twist_self_adjoint(&self) -> bool {
            let n = self.n;
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let (x, y) = (self.unit(i), self.unit(j));
                    self.form(&x, &y) == self.form(&y, &x) && self.form(&self.twist(&x), &y) == self.form(&x, &self.twist(&y))
                })
            })
        }
    }

    /// `p` invertible, `p[x, y] = [p x, p y]`, `p T = T' p` and `B'(p x, p y) = B(x, y)`,
    /// checked on basis vectors.
    pub fn is_isometric_isomorphism(a: &HomLieAlgebra, b: &HomLieAlgebra, p: &Mat) -> bool {
        let (ta, tb) = (Table::from_algebra(a), Table::from_algebra(b));
        let n = ta.n;
        if tb.n != n || p.rank() != n {
            return false;
        }
        let apply = |v: &[Rat]| p.mul_vec(v);
        (0..n).all(|i| {
            let x = ta.unit(i);
            apply(&ta.twist(&x)) == tb.twist(&apply(&x))
                && (0..n).all(|j| {
                    let y = ta.unit(j);
                    apply(&ta.bracket(&x, &y)) == tb.bracket(&apply(&x), &apply(&y))
                        && ta.form(&x, &y) == tb.form(&apply(&x), &apply(&y))
                })
        })
    }
}
