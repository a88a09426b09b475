//! Equivariant geometry of the minimal resolution of the A_n surface
//! singularity: torus-fixed points, tangent weights, the cohomology basis
//! `(1, omega_1..omega_n)` dual to the exceptional curves, the Poincare
//! pairing by localization, and root classes.
//!
//! Conventions. Fixed points are `p_1..p_{n+1}` with tangent weights
//! `wL_i = (n+2-i) t1 + (1-i) t2` and `wR_i = (-n+i-1) t1 + i t2`; the
//! exceptional curve `E_j` joins `p_j` to `p_{j+1}` and restricts to the
//! tangent weight normal to the curve: `E_j|_{p_j} = wL_j`,
//! `E_j|_{p_{j+1}} = wR_{j+1}` (this is the assignment under which
//! localization reproduces the negative Cartan matrix). The equivariant lift
//! of `omega_j` is `-sum_l (C^{-1})_{jl} E_l` with `C` the A_n Cartan
//! matrix, so `<omega_i, E_j> = delta_{ij}` holds equivariantly.

use exactalg::{int, rat, BigRat, RationalFunction, SparsePoly, Var};
use serde_json::{json, Value};

/// The equivariant surface data for a fixed `n >= 0` (`n = 0` is the plane).
#[derive(Debug, Clone)]
pub struct SurfaceData {
    n: usize,
    wl: Vec<SparsePoly>,
    wr: Vec<SparsePoly>,
    /// `restriction[c][i]` = value of basis class `c` (0 = unit, `j` =
    /// `omega_j`) at the fixed point `p_{i+1}`.
    restriction: Vec<Vec<RationalFunction>>,
}

/// A cohomology class in coordinates over the ordered basis
/// `(1, omega_1, ..., omega_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CohClass {
    coords: Vec<RationalFunction>,
}

/// The curve class `alpha_{ij} = d (E_i + ... + E_{j-1})`, a (multiple of a)
/// positive root of the A_n lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub d: u32,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j);
        Root { i, j, d: 1 }
    }

    pub fn with_multiple(i: usize, j: usize, d: u32) -> Self {
        assert!(1 <= i && i < j && d >= 1);
        Root { i, j, d }
    }

    /// All positive roots for the given `n` (unit multiple).
    pub fn positive(n: usize) -> Vec<Root> {
        let mut out = vec![];
        for i in 1..=n {
            for j in i + 1..=n + 1 {
                out.push(Root::new(i, j));
            }
        }
        out
    }
}

/// Tangent weights `(wL_i, wR_i)` at the fixed point `p_i`, `1 <= i <= n+1`.
pub fn tangent_weights(n: usize, i: usize) -> (SparsePoly, SparsePoly) {
    assert!((1..=n + 1).contains(&i), "fixed point index {i} out of range for n={n}");
    let t1 = SparsePoly::var(Var::T1);
    let t2 = SparsePoly::var(Var::T2);
    let lin = |a: i64, b: i64| t1.scale(&int(a)).add(&t2.scale(&int(b)));
    let i = i as i64;
    let n = n as i64;
    (lin(n + 2 - i, 1 - i), lin(-n + i - 1, i))
}

impl SurfaceData {
    pub fn new(n: usize) -> Self {
        let mut wl = vec![];
        let mut wr = vec![];
        for i in 1..=n + 1 {
            let (l, r) = tangent_weights(n, i);
            wl.push(l);
            wr.push(r);
        }
        // E_l restricted to the fixed points.
        let e_restr = |l: usize, i: usize| -> SparsePoly {
            if i == l {
                wl[i - 1].clone()
            } else if i == l + 1 {
                wr[i - 1].clone()
            } else {
                SparsePoly::zero()
            }
        };
        let mut restriction = vec![vec![RationalFunction::one(); n + 1]];
        for j in 1..=n {
            let row = (1..=n + 1)
                .map(|i| {
                    let mut v = SparsePoly::zero();
                    for l in 1..=n {
                        let c = cartan_inv(n, j, l);
                        if !num::Zero::is_zero(&c) {
                            v = v.add(&e_restr(l, i).scale(&(-c)));
                        }
                    }
                    RationalFunction::from_poly(v)
                })
                .collect();
            restriction.push(row);
        }
        SurfaceData { n, wl, wr, restriction }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of fixed points, `n + 1`.
    pub fn points(&self) -> usize {
        self.n + 1
    }

    pub fn wl(&self, i: usize) -> &SparsePoly {
        &self.wl[i - 1]
    }

    pub fn wr(&self, i: usize) -> &SparsePoly {
        &self.wr[i - 1]
    }

    // ------------------------------------------------------------- classes

    /// The unit class.
    pub fn one_class(&self) -> CohClass {
        let mut coords = vec![RationalFunction::zero(); self.n + 1];
        coords[0] = RationalFunction::one();
        CohClass { coords }
    }

    /// The dual class `omega_k`, `1 <= k <= n`.
    pub fn omega_class(&self, k: usize) -> CohClass {
        assert!((1..=self.n).contains(&k));
        let mut coords = vec![RationalFunction::zero(); self.n + 1];
        coords[k] = RationalFunction::one();
        CohClass { coords }
    }

    /// The exceptional curve class `E_l = -sum_k C_{lk} omega_k`.
    pub fn e_class(&self, l: usize) -> CohClass {
        assert!((1..=self.n).contains(&l));
        let mut coords = vec![RationalFunction::zero(); self.n + 1];
        for k in 1..=self.n {
            let c = cartan(self.n, l, k);
            if c != 0 {
                coords[k] = RationalFunction::constant(int(-c));
            }
        }
        CohClass { coords }
    }

    /// Value of the class at the fixed point `p_i`.
    pub fn restriction(&self, cls: &CohClass, i: usize) -> RationalFunction {
        assert!((1..=self.n + 1).contains(&i));
        assert_eq!(cls.coords.len(), self.n + 1);
        let mut v = RationalFunction::zero();
        for (c, row) in cls.coords.iter().zip(&self.restriction) {
            if !c.is_zero() {
                v = v.add(&c.mul(&row[i - 1]));
            }
        }
        v
    }

    /// Poincare pairing by T-equivariant residue:
    /// `sum_i a|_{p_i} b|_{p_i} / (wL_i wR_i)`.
    pub fn pairing(&self, a: &CohClass, b: &CohClass) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for i in 1..=self.n + 1 {
            let ra = self.restriction(a, i);
            if ra.is_zero() {
                continue;
            }
            let rb = self.restriction(b, i);
            if rb.is_zero() {
                continue;
            }
            let den = self.wl[i - 1].mul(&self.wr[i - 1]);
            acc = acc.add(&ra.mul(&rb).div(&RationalFunction::from_poly(den)));
        }
        acc
    }

    /// The class `[p_i]` with restriction `wL_i wR_i` at `p_i` and `0` at the
    /// other fixed points, in `(1, omega)` coordinates.
    pub fn fixed_point_class(&self, i: usize) -> CohClass {
        assert!((1..=self.n + 1).contains(&i));
        // Solve R^T x = wL_i wR_i e_i for the coordinates x.
        let a: Vec<Vec<RationalFunction>> = (0..=self.n)
            .map(|pt| (0..=self.n).map(|c| self.restriction[c][pt].clone()).collect())
            .collect();
        let mut b = vec![RationalFunction::zero(); self.n + 1];
        b[i - 1] = RationalFunction::from_poly(self.wl[i - 1].mul(&self.wr[i - 1]));
        let x = exactalg::linalg::solve_rf(&a, &b)
            .expect("restriction matrix is invertible for generic t");
        CohClass { coords: x }
    }

    /// Pairing of the root `alpha = d(E_i + ... + E_{j-1})` with a class.
    pub fn root_pairing(&self, alpha: Root, gamma: &CohClass) -> RationalFunction {
        assert!(alpha.j <= self.n + 1, "root out of range");
        let mut acc = RationalFunction::zero();
        for l in alpha.i..alpha.j {
            acc = acc.add(&self.pairing(&self.e_class(l), gamma));
        }
        acc.scale(&int(alpha.d as i64))
    }

    // ---------------------------------------------------------------- export

    /// Restriction matrix of the `(1, omega)` basis, rows = classes,
    /// columns = fixed points.
    pub fn restriction_matrix_json(&self) -> Value {
        let rows: Vec<Value> = self
            .restriction
            .iter()
            .map(|row| Value::Array(row.iter().map(exactalg::ratfunc_to_json).collect()))
            .collect();
        json!({ "n": self.n, "basis": self.basis_names(), "rows": rows })
    }

    /// Gram matrix of the Poincare pairing on the `(1, omega)` basis.
    pub fn pairing_matrix_json(&self) -> Value {
        let cls: Vec<CohClass> = (0..=self.n)
            .map(|c| if c == 0 { self.one_class() } else { self.omega_class(c) })
            .collect();
        let rows: Vec<Value> = cls
            .iter()
            .map(|a| {
                Value::Array(cls.iter().map(|b| exactalg::ratfunc_to_json(&self.pairing(a, b))).collect())
            })
            .collect();
        json!({ "n": self.n, "basis": self.basis_names(), "rows": rows })
    }

    fn basis_names(&self) -> Vec<String> {
        (0..=self.n)
            .map(|c| if c == 0 { "1".to_string() } else { format!("w{c}") })
            .collect()
    }
}

impl CohClass {
    pub fn from_coords(coords: Vec<RationalFunction>) -> Self {
        CohClass { coords }
    }

    /// Coordinates over `(1, omega_1, ..., omega_n)`.
    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        assert_eq!(self.coords.len(), other.coords.len());
        CohClass {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale_rf(&self, f: &RationalFunction) -> CohClass {
        CohClass { coords: self.coords.iter().map(|c| c.mul(f)).collect() }
    }

    pub fn scale(&self, c: &BigRat) -> CohClass {
        CohClass { coords: self.coords.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RationalFunction::is_zero)
    }
}

/// A_n Cartan matrix entry.
fn cartan(n: usize, i: usize, j: usize) -> i64 {
    assert!((1..=n).contains(&i) && (1..=n).contains(&j));
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// Inverse A_n Cartan matrix entry: `min(i,j) - ij/(n+1)`.
fn cartan_inv(n: usize, i: usize, j: usize) -> BigRat {
    let m = i.min(j) as i64;
    rat(m, 1) - rat((i * j) as i64, n as i64 + 1)
}
