//! Finite-dimensional Hopf algebras given by structure constants.

use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use super::Scalar;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Sparse vector: (basis index, coefficient), indices increasing.
pub type Sparse<F> = Vec<(usize, F)>;

/// A Hopf algebra over `F` with basis `e_0, …, e_{d-1}`, optionally with a
/// pivot `p`.
#[derive(Clone, Debug)]
pub struct FinHopf<F> {
    pub name: String,
    pub basis: Vec<String>,
    mult: Vec<Vec<Sparse<F>>>,
    unit: Vec<F>,
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Vec<Sparse<F>>,
    antipode_inv: Option<Vec<Sparse<F>>>,
    pivot: Option<Vec<F>>,
    t_map: Option<Vec<Sparse<F>>>,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub ok: bool,
    pub detail: Option<String>,
}

impl AxiomCheck {
    fn new(axiom: &str, failure: Option<String>) -> Self {
        AxiomCheck { axiom: axiom.to_string(), ok: failure.is_none(), detail: failure }
    }
}

/// JSON structure-tensor file. Coefficients are strings (`"-1/2"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    /// S(e_i) = Σ c e_j as `[i, j, c]`.
    pub antipode: Vec<(usize, usize, String)>,
    pub basis: Vec<String>,
    /// Δ(e_i) = Σ c e_j ⊗ e_k as `[i, j, k, c]`.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    /// e_i e_j = Σ c e_k as `[i, j, k, c]`.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<Vec<String>>,
    pub unit: Vec<String>,
}

fn to_sparse<F: Scalar>(dense: &[F]) -> Sparse<F> {
    dense.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn axpy<F: Scalar>(acc: &mut [F], c: &F, x: &[(usize, F)]) {
    for (i, v) in x {
        acc[*i] = acc[*i].clone() + c.clone() * v.clone();
    }
}

type Tensor3<F> = Vec<Vec<Vec<F>>>;

impl<F: Scalar> FinHopf<F> {
    /// Assemble from structure constants; shapes are checked, axioms are
    /// not (see [`FinHopf::check_axioms`]).
    pub fn from_tensors(
        name: &str,
        basis: Vec<String>,
        mult: Vec<Vec<Sparse<F>>>,
        unit: Vec<F>,
        comult: Vec<Vec<(usize, usize, F)>>,
        counit: Vec<F>,
        antipode: Vec<Sparse<F>>,
    ) -> Result<Self> {
        let d = basis.len();
        let bad = |what: &str| Error::InvalidStructure(format!("{name}: {what}"));
        if d == 0 {
            return Err(bad("empty basis"));
        }
        if mult.len() != d || mult.iter().any(|r| r.len() != d) {
            return Err(bad("multiplication table shape"));
        }
        let in_range = |s: &Sparse<F>| s.iter().all(|(i, _)| *i < d);
        if mult.iter().flatten().any(|s| !in_range(s)) || antipode.iter().any(|s| !in_range(s)) {
            return Err(bad("basis index out of range"));
        }
        if unit.len() != d || counit.len() != d || comult.len() != d || antipode.len() != d {
            return Err(bad("tensor shapes"));
        }
        if comult.iter().flatten().any(|(j, k, _)| *j >= d || *k >= d) {
            return Err(bad("comultiplication index out of range"));
        }
        let mut h = FinHopf {
            name: name.to_string(),
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv: None,
            pivot: None,
            t_map: None,
        };
        h.antipode_inv = h.antipode_matrix().inverse().map(|m| {
            (0..d).map(|i| to_sparse(&m.column(i))).collect()
        });
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The group algebra F[G]: grouplike basis, S(g) = g⁻¹.
    pub fn group_algebra(group: &FiniteGroup) -> Self {
        let n = group.order();
        let basis = (0..n).map(|g| group.element_name(g).to_string()).collect();
        let mult = (0..n).map(|a| (0..n).map(|b| vec![(group.mul(a, b), F::one())]).collect()).collect();
        let mut unit = vec![F::zero(); n];
        unit[group.identity()] = F::one();
        let comult = (0..n).map(|g| vec![(g, g, F::one())]).collect();
        let counit = vec![F::one(); n];
        let antipode = (0..n).map(|g| vec![(group.inv(g), F::one())]).collect();
        Self::from_tensors(&format!("F[{}]", group.name()), basis, mult, unit, comult, counit, antipode)
            .expect("group algebra is well shaped")
    }

    /// Sweedler's 4-dimensional algebra with basis `1, g, x, gx`:
    /// g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
    pub fn sweedler4() -> Result<Self> {
        if F::from_i64(2).is_zero() {
            return Err(Error::Precondition("Sweedler's algebra needs characteristic != 2".into()));
        }
        // Basis index = a + 2b for g^a x^b.
        let idx = |a: usize, b: usize| a + 2 * b;
        let one = F::one();
        let mut mult = vec![vec![Vec::new(); 4]; 4];
        for (a, b, c, d) in itertools::iproduct!(0..2, 0..2, 0..2, 0..2) {
            // g^a x^b g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}
            if b + d < 2 {
                let sign = if b * c == 1 { -one.clone() } else { one.clone() };
                mult[idx(a, b)][idx(c, d)] = vec![(idx((a + c) % 2, b + d), sign)];
            }
        }
        let unit = vec![one.clone(), F::zero(), F::zero(), F::zero()];
        let comult = vec![
            vec![(0, 0, one.clone())],
            vec![(1, 1, one.clone())],
            // Δx = x⊗1 + g⊗x
            vec![(2, 0, one.clone()), (1, 2, one.clone())],
            // Δ(gx) = gx⊗g + 1⊗gx
            vec![(3, 1, one.clone()), (0, 3, one.clone())],
        ];
        let counit = vec![one.clone(), one.clone(), F::zero(), F::zero()];
        let antipode = vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(3, -one.clone())],
            vec![(2, one.clone())],
        ];
        let basis = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
        Self::from_tensors("sweedler4", basis, mult, unit, comult, counit, antipode)
    }

    /// Built-ins: `sweedler4`, or `F[G]` / `G` for a named finite group.
    pub fn by_name(name: &str) -> Result<Self> {
        if name == "sweedler4" || name == "sweedler" {
            return Self::sweedler4();
        }
        let g = name.strip_prefix("F[").and_then(|s| s.strip_suffix(']')).unwrap_or(name);
        Ok(Self::group_algebra(&FiniteGroup::by_name(g)?))
    }

    pub fn from_json(spec: &HopfJson) -> Result<Self> {
        let d = spec.basis.len();
        let parse = |s: &String| F::parse(s);
        let parse_vec = |v: &[String]| v.iter().map(parse).collect::<Result<Vec<F>>>();
        let check = |i: usize| {
            if i < d {
                Ok(i)
            } else {
                Err(Error::InvalidStructure(format!("{}: basis index {i} out of range", spec.name)))
            }
        };
        let mut mult = vec![vec![vec![F::zero(); d]; d]; d];
        for (i, j, k, c) in &spec.mult {
            let v = &mut mult[check(*i)?][check(*j)?][check(*k)?];
            *v = v.clone() + parse(c)?;
        }
        let mult = mult.iter().map(|r| r.iter().map(|v| to_sparse(v)).collect()).collect();
        let mut comult = vec![Vec::new(); d];
        for (i, j, k, c) in &spec.comult {
            comult[check(*i)?].push((check(*j)?, check(*k)?, parse(c)?));
        }
        let mut antipode = vec![vec![F::zero(); d]; d];
        for (i, j, c) in &spec.antipode {
            let v = &mut antipode[check(*i)?][check(*j)?];
            *v = v.clone() + parse(c)?;
        }
        let antipode = antipode.iter().map(|v| to_sparse(v)).collect();
        let h = Self::from_tensors(
            &spec.name,
            spec.basis.clone(),
            mult,
            parse_vec(&spec.unit)?,
            comult,
            parse_vec(&spec.counit)?,
            antipode,
        )?;
        match &spec.pivot {
            Some(p) => h.with_pivot(parse_vec(p)?),
            None => Ok(h),
        }
    }

    pub fn to_json(&self) -> HopfJson {
        let d = self.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &self.mult[i][j] {
                    mult.push((i, j, *k, c.to_string()));
                }
            }
        }
        let comult = (0..d)
            .flat_map(|i| self.comult[i].iter().map(move |(j, k, c)| (i, *j, *k, c.to_string())))
            .collect();
        let antipode = (0..d)
            .flat_map(|i| self.antipode[i].iter().map(move |(j, c)| (i, *j, c.to_string())))
            .collect();
        let strs = |v: &[F]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        HopfJson {
            antipode,
            basis: self.basis.clone(),
            comult,
            counit: strs(&self.counit),
            mult,
            name: self.name.clone(),
            pivot: self.pivot.as_ref().map(|p| strs(p)),
            unit: strs(&self.unit),
        }
    }

    /// Fix a pivot after checking the pivotal conditions.
    pub fn with_pivot(mut self, p: Vec<F>) -> Result<Self> {
        if p.len() != self.dim() {
            return Err(Error::InvalidStructure("pivot has the wrong dimension".into()));
        }
        if let Some(bad) = self.pivot_conditions(&p).into_iter().find(|c| !c.ok) {
            return Err(Error::Precondition(format!("not a pivot: {} fails", bad.axiom)));
        }
        let d = self.dim();
        let t = (0..d).map(|i| to_sparse(&self.mul(&p, &self.antipode_vec(&self.basis_vec(i))))).collect();
        self.pivot = Some(p);
        self.t_map = Some(t);
        Ok(self)
    }

    /// Fix the pivot to a named basis element.
    pub fn with_pivot_named(self, name: &str) -> Result<Self> {
        let i = self
            .basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::Unknown(format!("basis element {name} of {}", self.name)))?;
        let p = self.basis_vec(i);
        self.with_pivot(p)
    }

    pub fn pivot(&self) -> Option<&[F]> {
        self.pivot.as_deref()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.mult[i][j]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comult[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &Sparse<F> {
        &self.antipode[i]
    }

    pub fn antipode_inv_basis(&self, i: usize) -> Result<&Sparse<F>> {
        self.antipode_inv
            .as_ref()
            .map(|s| &s[i])
            .ok_or_else(|| Error::Precondition(format!("antipode of {} is not invertible", self.name)))
    }

    /// T(e_i) = p·S(e_i).
    pub fn t_basis(&self, i: usize) -> Result<&Sparse<F>> {
        self.t_map
            .as_ref()
            .map(|t| &t[i])
            .ok_or_else(|| Error::Precondition(format!("no pivot fixed for {}", self.name)))
    }

    /// Mutate a product for negative controls.
    pub fn set_product(&mut self, i: usize, j: usize, value: Sparse<F>) {
        self.mult[i][j] = value;
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in to_sparse(x) {
            for (j, b) in to_sparse(y) {
                axpy(&mut out, &(a.clone() * b.clone()), &self.mult[i][j]);
            }
        }
        out
    }

    /// Δ(x) as a dense d×d coefficient table.
    pub fn comul(&self, x: &[F]) -> Vec<Vec<F>> {
        let d = self.dim();
        let mut out = vec![vec![F::zero(); d]; d];
        for (i, a) in to_sparse(x) {
            for (j, k, c) in &self.comult[i] {
                out[*j][*k] = out[*j][*k].clone() + a.clone() * c.clone();
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        x.iter().zip(&self.counit).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    fn apply_sparse_map(&self, map: &[Sparse<F>], x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in to_sparse(x) {
            axpy(&mut out, &a, &map[i]);
        }
        out
    }

    pub fn antipode_vec(&self, x: &[F]) -> Vec<F> {
        self.apply_sparse_map(&self.antipode, x)
    }

    pub fn t_vec(&self, x: &[F]) -> Result<Vec<F>> {
        let t = self.t_map.as_ref().ok_or_else(|| Error::Precondition("no pivot fixed".into()))?;
        Ok(self.apply_sparse_map(t, x))
    }

    pub fn antipode_matrix(&self) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|i| self.antipode_vec(&self.basis_vec(i))).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    pub fn t_matrix(&self) -> Result<Matrix<F>> {
        let cols = (0..self.dim()).map(|i| self.t_vec(&self.basis_vec(i))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, self.dim()))
    }

    fn tensor_of(&self, x: &[Vec<F>], f: impl Fn(&[F]) -> Vec<Vec<F>>) -> Tensor3<F> {
        // Apply a map H → H⊗H to the second leg of a d×d table.
        let d = self.dim();
        let mut out = vec![vec![vec![F::zero(); d]; d]; d];
        for (i, row) in x.iter().enumerate() {
            let img = f(row);
            for j in 0..d {
                for k in 0..d {
                    out[i][j][k] = out[i][j][k].clone() + img[j][k].clone();
                }
            }
        }
        out
    }

    /// All Hopf axioms as exact identities on basis elements.
    pub fn check_axioms(&self) -> Vec<AxiomCheck> {
        let d = self.dim();
        let e = |i: usize| self.basis_vec(i);
        let name = |i: usize| self.basis[i].clone();
        let mut out = Vec::new();

        let mut fail = None;
        'assoc: for (i, j, k) in itertools::iproduct!(0..d, 0..d, 0..d) {
            let l = self.mul(&self.mul(&e(i), &e(j)), &e(k));
            let r = self.mul(&e(i), &self.mul(&e(j), &e(k)));
            if l != r {
                fail = Some(format!("({} {}) {} differs", name(i), name(j), name(k)));
                break 'assoc;
            }
        }
        out.push(AxiomCheck::new("associativity", fail));

        let fail = (0..d)
            .find(|&i| self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i))
            .map(|i| format!("unit fails on {}", name(i)));
        out.push(AxiomCheck::new("unit", fail));

        // (Δ⊗1)Δ = (1⊗Δ)Δ, compared as d³ tables.
        let fail = (0..d)
            .find(|&i| {
                let dx = self.comul(&e(i));
                let right = self.tensor_of(&dx, |v| self.comul(v));
                let mut left = vec![vec![vec![F::zero(); d]; d]; d];
                for a in 0..d {
                    for b in 0..d {
                        if dx[a][b].is_zero() {
                            continue;
                        }
                        let da = self.comul(&e(a));
                        for x in 0..d {
                            for y in 0..d {
                                left[x][y][b] = left[x][y][b].clone() + dx[a][b].clone() * da[x][y].clone();
                            }
                        }
                    }
                }
                left != right
            })
            .map(|i| format!("coassociativity fails on {}", name(i)));
        out.push(AxiomCheck::new("coassociativity", fail));

        let fail = (0..d)
            .find(|&i| {
                let dx = self.comul(&e(i));
                let left: Vec<F> = (0..d)
                    .map(|k| (0..d).fold(F::zero(), |acc, j| acc + self.counit[j].clone() * dx[j][k].clone()))
                    .collect();
                let right: Vec<F> = (0..d)
                    .map(|j| (0..d).fold(F::zero(), |acc, k| acc + dx[j][k].clone() * self.counit[k].clone()))
                    .collect();
                left != e(i) || right != e(i)
            })
            .map(|i| format!("counit fails on {}", name(i)));
        out.push(AxiomCheck::new("counit", fail));

        // Δ(xy) = Δ(x)Δ(y), ε(xy) = ε(x)ε(y), Δ(1) = 1⊗1, ε(1) = 1.
        let mut fail = None;
        for (i, j) in itertools::iproduct!(0..d, 0..d) {
            let xy = self.mul(&e(i), &e(j));
            let lhs = self.comul(&xy);
            let (di, dj) = (self.comul(&e(i)), self.comul(&e(j)));
            let mut rhs = vec![vec![F::zero(); d]; d];
            for (a, b, c, dd) in itertools::iproduct!(0..d, 0..d, 0..d, 0..d) {
                let coef = di[a][b].clone() * dj[c][dd].clone();
                if coef.is_zero() {
                    continue;
                }
                let l = &self.mult[a][c];
                let r = &self.mult[b][dd];
                for (x, u) in l {
                    for (y, v) in r {
                        rhs[*x][*y] = rhs[*x][*y].clone() + coef.clone() * u.clone() * v.clone();
                    }
                }
            }
            if lhs != rhs {
                fail = Some(format!("Δ({} {}) differs", name(i), name(j)));
                break;
            }
            if self.counit_of(&xy) != self.counit[i].clone() * self.counit[j].clone() {
                fail = Some(format!("ε({} {}) differs", name(i), name(j)));
                break;
            }
        }
        if fail.is_none() {
            let du = self.comul(&self.unit);
            let expect: Vec<Vec<F>> =
                (0..d).map(|a| (0..d).map(|b| self.unit[a].clone() * self.unit[b].clone()).collect()).collect();
            if du != expect || self.counit_of(&self.unit) != F::one() {
                fail = Some("unit is not grouplike".into());
            }
        }
        out.push(AxiomCheck::new("bialgebra", fail));

        // m(S⊗1)Δ = m(1⊗S)Δ = ηε
        let fail = (0..d)
            .find(|&i| {
                let dx = self.comul(&e(i));
                let mut l = vec![F::zero(); d];
                let mut r = vec![F::zero(); d];
                for a in 0..d {
                    for b in 0..d {
                        if dx[a][b].is_zero() {
                            continue;
                        }
                        let sl = self.mul(&self.antipode_vec(&e(a)), &e(b));
                        let sr = self.mul(&e(a), &self.antipode_vec(&e(b)));
                        for k in 0..d {
                            l[k] = l[k].clone() + dx[a][b].clone() * sl[k].clone();
                            r[k] = r[k].clone() + dx[a][b].clone() * sr[k].clone();
                        }
                    }
                }
                let expect: Vec<F> = self.unit.iter().map(|u| u.clone() * self.counit[i].clone()).collect();
                l != expect || r != expect
            })
            .map(|i| format!("antipode fails on {}", name(i)));
        out.push(AxiomCheck::new("antipode", fail));
        out
    }

    /// Δp = p⊗p, ε(p) = 1 and p·S²(h)·S(p) = h for all basis h.
    pub fn pivot_conditions(&self, p: &[F]) -> Vec<AxiomCheck> {
        let d = self.dim();
        let dp = self.comul(p);
        let pp: Vec<Vec<F>> = (0..d).map(|a| (0..d).map(|b| p[a].clone() * p[b].clone()).collect()).collect();
        let mut out = vec![
            AxiomCheck::new("pivot grouplike", (dp != pp).then(|| "Δp ≠ p⊗p".to_string())),
            AxiomCheck::new(
                "pivot counit",
                (self.counit_of(p) != F::one()).then(|| "ε(p) ≠ 1".to_string()),
            ),
        ];
        let sp = self.antipode_vec(p);
        let fail = (0..d)
            .find(|&i| {
                let h = self.basis_vec(i);
                let s2 = self.antipode_vec(&self.antipode_vec(&h));
                self.mul(&self.mul(p, &s2), &sp) != h
            })
            .map(|i| format!("p S²({}) S(p) ≠ {}", self.basis[i], self.basis[i]));
        out.push(AxiomCheck::new("pivotal identity", fail));
        out
    }

    /// Pivot candidates among the basis vectors and the unit.
    pub fn find_pivots(&self) -> Vec<Vec<F>> {
        let mut cands: Vec<Vec<F>> = (0..self.dim()).map(|i| self.basis_vec(i)).collect();
        if !cands.contains(&self.unit) {
            cands.push(self.unit.clone());
        }
        cands.into_iter().filter(|p| self.pivot_conditions(p).iter().all(|c| c.ok)).collect()
    }

    /// Name a vector by its basis expansion.
    pub fn show(&self, x: &[F]) -> String {
        let terms: Vec<String> = to_sparse(x)
            .into_iter()
            .map(|(i, c)| if c == F::one() { self.basis[i].clone() } else { format!("{c}·{}", self.basis[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// T∘T = id, ε∘T = ε and Δ∘T = (T⊗T)∘Δ^op.
    pub fn check_t_identities(&self) -> Result<Vec<AxiomCheck>> {
        let d = self.dim();
        let t = self.t_matrix()?;
        let mut out = vec![AxiomCheck::new(
            "T∘T = id",
            (t.mul(&t) != Matrix::identity(d)).then(|| "T is not an involution".to_string()),
        )];
        let fail = (0..d)
            .find(|&i| self.counit_of(&self.t_vec(&self.basis_vec(i)).expect("pivot")) != self.counit[i])
            .map(|i| format!("ε(T({})) ≠ ε({})", self.basis[i], self.basis[i]));
        out.push(AxiomCheck::new("ε∘T = ε", fail));
        let fail = (0..d)
            .find(|&i| {
                let lhs = self.comul(&self.t_vec(&self.basis_vec(i)).expect("pivot"));
                let mut rhs = vec![vec![F::zero(); d]; d];
                for (a, b, c) in &self.comult[i] {
                    let ta = self.t_vec(&self.basis_vec(*a)).expect("pivot");
                    let tb = self.t_vec(&self.basis_vec(*b)).expect("pivot");
                    for x in 0..d {
                        for y in 0..d {
                            rhs[x][y] = rhs[x][y].clone() + c.clone() * tb[x].clone() * ta[y].clone();
                        }
                    }
                }
                lhs != rhs
            })
            .map(|i| format!("Δ(T({})) differs", self.basis[i]));
        out.push(AxiomCheck::new("Δ∘T = (T⊗T)∘Δ^op", fail));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{Fp, Q};
    use num_traits::Zero;

    fn all_ok(c: &[AxiomCheck]) -> bool {
        c.iter().all(|x| x.ok)
    }

    #[test]
    fn group_algebras_pass() {
        for g in ["Z2", "Z3", "S3"] {
            let h: FinHopf<Q> = FinHopf::by_name(g).unwrap();
            assert!(all_ok(&h.check_axioms()), "{g}");
        }
    }

    #[test]
    fn sweedler_passes_over_q_and_fp() {
        let h: FinHopf<Q> = FinHopf::sweedler4().unwrap();
        assert!(all_ok(&h.check_axioms()));
        let h: FinHopf<Fp<5>> = FinHopf::sweedler4().unwrap();
        assert!(all_ok(&h.check_axioms()));
        assert!(FinHopf::<Fp<2>>::sweedler4().is_err());
    }

    #[test]
    fn corrupted_product_fails_associativity() {
        let mut h: FinHopf<Q> = FinHopf::sweedler4().unwrap();
        h.set_product(2, 1, vec![(3, Q::from_i64(1))]);
        let report = h.check_axioms();
        assert!(!report.iter().find(|c| c.axiom == "associativity").unwrap().ok);
    }

    #[test]
    fn pivots() {
        let s3: FinHopf<Q> = FinHopf::by_name("S3").unwrap();
        assert_eq!(s3.find_pivots(), vec![s3.basis_vec(0)]);
        let d4: FinHopf<Q> = FinHopf::by_name("D4").unwrap();
        assert_eq!(d4.find_pivots().len(), 2);
        let sw: FinHopf<Q> = FinHopf::sweedler4().unwrap();
        // g is pivotal, 1 is not (S² ≠ id).
        assert_eq!(sw.find_pivots(), vec![sw.basis_vec(1)]);
        assert!(sw.clone().with_pivot_named("1").is_err());
    }

    #[test]
    fn t_is_involution() {
        let sw: FinHopf<Q> = FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap();
        assert!(all_ok(&sw.check_t_identities().unwrap()));
        let d4: FinHopf<Q> = FinHopf::by_name("D4").unwrap();
        let p = d4.find_pivots()[1].clone();
        let d4 = d4.with_pivot(p.clone()).unwrap();
        assert!(all_ok(&d4.check_t_identities().unwrap()));
        // Group case: T(x) = p·x⁻¹ on basis.
        let grp = FiniteGroup::by_name("D4").unwrap();
        let pi = p.iter().position(|c| !c.is_zero()).unwrap();
        for x in 0..8 {
            assert_eq!(d4.t_basis(x).unwrap(), &vec![(grp.mul(pi, grp.inv(x)), Q::from_i64(1))]);
        }
    }

    #[test]
    fn json_roundtrip() {
        let sw: FinHopf<Q> = FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let j = sw.to_json();
        let back = FinHopf::<Q>::from_json(&j).unwrap();
        assert_eq!(back.to_json(), j);
        assert!(all_ok(&back.check_axioms()));
    }
}
