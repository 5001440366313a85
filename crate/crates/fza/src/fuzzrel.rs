//! Fuzzy sets and fuzzy relations over a finite state index set, with the
//! sup-tensor compositions, residuals, order tests, and quasi-order
//! predicates. Relations are dense matrices; all comparisons are exact.

use crate::lattice::{LatticeKind, TruthValue};
use crate::{FzaError, Result};

/// A fuzzy subset of a finite index set: one truth value per index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FuzzySet {
    pub kind: LatticeKind,
    pub values: Vec<TruthValue>,
}

/// A fuzzy relation as an n x m matrix of truth values, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FuzzyRelation {
    pub kind: LatticeKind,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<TruthValue>,
}

impl FuzzySet {
    pub fn new(kind: LatticeKind, values: Vec<TruthValue>) -> Result<Self> {
        if values.is_empty() {
            return Err(FzaError::DimensionMismatch("empty fuzzy set".into()));
        }
        for v in &values {
            kind.check_member(v)?;
        }
        Ok(FuzzySet { kind, values })
    }

    pub fn zeros(kind: LatticeKind, n: usize) -> Self {
        FuzzySet {
            kind,
            values: vec![kind.zero(); n],
        }
    }

    /// Crisp singleton: 1 at `i`, 0 elsewhere.
    pub fn unit(kind: LatticeKind, n: usize, i: usize) -> Self {
        let mut s = Self::zeros(kind, n);
        s.values[i] = kind.one();
        s
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        same_kind(self.kind, other.kind)?;
        same_dim(self.len(), other.len())?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| self.kind.le(a, b)))
    }
}

impl FuzzyRelation {
    pub fn new(kind: LatticeKind, rows: usize, cols: usize, entries: Vec<TruthValue>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(FzaError::DimensionMismatch("empty relation".into()));
        }
        if entries.len() != rows * cols {
            return Err(FzaError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} relation",
                entries.len()
            )));
        }
        for v in &entries {
            kind.check_member(v)?;
        }
        Ok(FuzzyRelation {
            kind,
            rows,
            cols,
            entries,
        })
    }

    /// The crisp equality relation on `n` indices.
    pub fn identity(kind: LatticeKind, n: usize) -> Self {
        let mut entries = vec![kind.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = kind.one();
        }
        FuzzyRelation {
            kind,
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Builds from a closure over (row, col).
    pub fn from_fn(
        kind: LatticeKind,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> TruthValue,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        FuzzyRelation {
            kind,
            rows,
            cols,
            entries,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &TruthValue {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[TruthValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_set(&self, i: usize) -> FuzzySet {
        FuzzySet {
            kind: self.kind,
            values: self.row(i).to_vec(),
        }
    }

    pub fn col_set(&self, j: usize) -> FuzzySet {
        FuzzySet {
            kind: self.kind,
            values: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> FuzzyRelation {
        FuzzyRelation::from_fn(self.kind, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn leq(&self, other: &FuzzyRelation) -> Result<bool> {
        same_kind(self.kind, other.kind)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(FzaError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| self.kind.le(a, b)))
    }

    /// Pointwise meet of two relations of the same shape.
    pub fn meet(&self, other: &FuzzyRelation) -> Result<FuzzyRelation> {
        same_kind(self.kind, other.kind)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(FzaError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.kind.meet(a, b))
            .collect::<Result<_>>()?;
        Ok(FuzzyRelation {
            kind: self.kind,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// All diagonal entries equal 1.
    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_square()?;
        Ok((0..self.rows).all(|i| self.kind.is_one(self.get(i, i))))
    }

    /// `self ∘ self <= self` pointwise.
    pub fn is_transitive(&self) -> Result<bool> {
        self.require_square()?;
        compose_rr(self, self)?.leq(self)
    }

    pub fn is_quasi_order(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_transitive()?)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(FzaError::DimensionMismatch(format!(
                "{}x{} relation is not square",
                self.rows, self.cols
            )))
        }
    }

    /// Number of pairwise-distinct rows, plus the grouping of row indices
    /// by exact equality (group order: first appearance).
    pub fn distinct_rows(&self) -> (usize, Vec<Vec<usize>>) {
        use std::collections::HashMap;
        let mut seen: HashMap<&[TruthValue], usize> = HashMap::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.rows {
            match seen.get(self.row(i)) {
                Some(&g) => groups[g].push(i),
                None => {
                    seen.insert(self.row(i), groups.len());
                    groups.push(vec![i]);
                }
            }
        }
        (groups.len(), groups)
    }
}

fn same_kind(a: LatticeKind, b: LatticeKind) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(FzaError::KindMismatch)
    }
}

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(FzaError::DimensionMismatch(format!("{a} vs {b}")))
    }
}

/// Relation-relation composition: `(a∘b)(i,k) = ⋁_j a(i,j) ⊗ b(j,k)`.
pub fn compose_rr(a: &FuzzyRelation, b: &FuzzyRelation) -> Result<FuzzyRelation> {
    same_kind(a.kind, b.kind)?;
    same_dim(a.cols, b.rows)?;
    let kind = a.kind;
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for k in 0..b.cols {
            let mut acc = kind.zero();
            for j in 0..a.cols {
                let t = kind.tensor(a.get(i, j), b.get(j, k))?;
                acc = kind.join(&acc, &t)?;
            }
            entries.push(acc);
        }
    }
    Ok(FuzzyRelation {
        kind,
        rows: a.rows,
        cols: b.cols,
        entries,
    })
}

/// Set-relation composition: `(f∘a)(j) = ⋁_i f(i) ⊗ a(i,j)`.
pub fn compose_sr(f: &FuzzySet, a: &FuzzyRelation) -> Result<FuzzySet> {
    same_kind(f.kind, a.kind)?;
    same_dim(f.len(), a.rows)?;
    let kind = f.kind;
    let mut values = Vec::with_capacity(a.cols);
    for j in 0..a.cols {
        let mut acc = kind.zero();
        for i in 0..a.rows {
            let t = kind.tensor(&f.values[i], a.get(i, j))?;
            acc = kind.join(&acc, &t)?;
        }
        values.push(acc);
    }
    Ok(FuzzySet { kind, values })
}

/// Relation-set composition: `(a∘g)(i) = ⋁_j a(i,j) ⊗ g(j)`.
pub fn compose_rs(a: &FuzzyRelation, g: &FuzzySet) -> Result<FuzzySet> {
    same_kind(a.kind, g.kind)?;
    same_dim(a.cols, g.len())?;
    let kind = a.kind;
    let mut values = Vec::with_capacity(a.rows);
    for i in 0..a.rows {
        let mut acc = kind.zero();
        for j in 0..a.cols {
            let t = kind.tensor(a.get(i, j), &g.values[j])?;
            acc = kind.join(&acc, &t)?;
        }
        values.push(acc);
    }
    Ok(FuzzySet { kind, values })
}

/// Scalar composition of two sets: `⋁_i f(i) ⊗ g(i)`.
pub fn dot(f: &FuzzySet, g: &FuzzySet) -> Result<TruthValue> {
    same_kind(f.kind, g.kind)?;
    same_dim(f.len(), g.len())?;
    let kind = f.kind;
    let mut acc = kind.zero();
    for (a, b) in f.values.iter().zip(&g.values) {
        let t = kind.tensor(a, b)?;
        acc = kind.join(&acc, &t)?;
    }
    Ok(acc)
}

/// Right residual of `b` by `a`: `(a\b)(i,j) = ⋀_k a(k,i) -> b(k,j)`.
pub fn residual_right_rel(a: &FuzzyRelation, b: &FuzzyRelation) -> Result<FuzzyRelation> {
    same_kind(a.kind, b.kind)?;
    same_dim(a.rows, b.rows)?;
    let kind = a.kind;
    let mut entries = Vec::with_capacity(a.cols * b.cols);
    for i in 0..a.cols {
        for j in 0..b.cols {
            let mut acc = kind.one();
            for k in 0..a.rows {
                let r = kind.residuum(a.get(k, i), b.get(k, j))?;
                acc = kind.meet(&acc, &r)?;
            }
            entries.push(acc);
        }
    }
    Ok(FuzzyRelation {
        kind,
        rows: a.cols,
        cols: b.cols,
        entries,
    })
}

/// Left residual of `b` by `a`: `(b/a)(i,j) = ⋀_k a(j,k) -> b(i,k)`.
pub fn residual_left_rel(b: &FuzzyRelation, a: &FuzzyRelation) -> Result<FuzzyRelation> {
    same_kind(a.kind, b.kind)?;
    same_dim(a.cols, b.cols)?;
    let kind = a.kind;
    let mut entries = Vec::with_capacity(b.rows * a.rows);
    for i in 0..b.rows {
        for j in 0..a.rows {
            let mut acc = kind.one();
            for k in 0..a.cols {
                let r = kind.residuum(a.get(j, k), b.get(i, k))?;
                acc = kind.meet(&acc, &r)?;
            }
            entries.push(acc);
        }
    }
    Ok(FuzzyRelation {
        kind,
        rows: b.rows,
        cols: a.rows,
        entries,
    })
}

/// Right residual of `g` by `f`: `(f\g)(i,j) = f(i) -> g(j)`.
pub fn residual_right_set(f: &FuzzySet, g: &FuzzySet) -> Result<FuzzyRelation> {
    same_kind(f.kind, g.kind)?;
    same_dim(f.len(), g.len())?;
    let kind = f.kind;
    let n = f.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(kind.residuum(&f.values[i], &g.values[j])?);
        }
    }
    Ok(FuzzyRelation {
        kind,
        rows: n,
        cols: n,
        entries,
    })
}

/// Left residual of `g` by `f`: `(g/f)(j,i) = f(i) -> g(j)`.
pub fn residual_left_set(g: &FuzzySet, f: &FuzzySet) -> Result<FuzzyRelation> {
    Ok(residual_right_set(f, g)?.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::TruthValue as Tv;

    fn bset(bits: &[u8]) -> FuzzySet {
        FuzzySet::new(
            LatticeKind::Boolean,
            bits.iter()
                .map(|&b| {
                    if b == 1 {
                        LatticeKind::Boolean.one()
                    } else {
                        LatticeKind::Boolean.zero()
                    }
                })
                .collect(),
        )
        .unwrap()
    }

    fn brel(rows: &[&[u8]]) -> FuzzyRelation {
        let k = LatticeKind::Boolean;
        FuzzyRelation::new(
            k,
            rows.len(),
            rows[0].len(),
            rows.iter()
                .flat_map(|r| r.iter().map(|&b| if b == 1 { k.one() } else { k.zero() }))
                .collect(),
        )
        .unwrap()
    }

    fn grel(rows: &[&[(i64, i64)]], kind: LatticeKind) -> FuzzyRelation {
        FuzzyRelation::new(
            kind,
            rows.len(),
            rows[0].len(),
            rows.iter()
                .flat_map(|r| r.iter().map(|&(p, q)| Tv::rational(p, q)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn compose_rr_examples() {
        let b = brel(&[&[0, 1], &[1, 0]]);
        let id = FuzzyRelation::identity(LatticeKind::Boolean, 2);
        assert_eq!(compose_rr(&id, &b).unwrap(), b);

        let g = LatticeKind::Godel;
        let a = grel(&[&[(1, 2), (1, 1)], &[(0, 1), (3, 10)]], g);
        let c = grel(&[&[(1, 5), (0, 1)], &[(1, 1), (2, 5)]], g);
        let expect = grel(&[&[(1, 1), (2, 5)], &[(3, 10), (3, 10)]], g);
        assert_eq!(compose_rr(&a, &c).unwrap(), expect);
    }

    #[test]
    fn compose_sr_examples() {
        let f = bset(&[1, 0, 0]);
        let a = brel(&[&[0, 1, 0], &[1, 0, 1], &[1, 0, 0]]);
        assert_eq!(compose_sr(&f, &a).unwrap(), bset(&[0, 1, 0]));
        let id = FuzzyRelation::identity(LatticeKind::Boolean, 3);
        assert_eq!(compose_sr(&f, &id).unwrap(), f);
    }

    #[test]
    fn dot_examples() {
        let l = LatticeKind::Lukasiewicz;
        let f = FuzzySet::new(l, vec![Tv::rational(7, 10), Tv::rational(3, 5)]).unwrap();
        let g = FuzzySet::new(l, vec![Tv::rational(1, 2), Tv::rational(3, 10)]).unwrap();
        assert_eq!(dot(&f, &g).unwrap(), Tv::rational(1, 5));

        assert_eq!(
            dot(&bset(&[1, 0, 1]), &bset(&[0, 0, 1])).unwrap(),
            LatticeKind::Boolean.one()
        );
        let zeros = FuzzySet::zeros(LatticeKind::Boolean, 3);
        assert_eq!(
            dot(&bset(&[1, 1, 0]), &zeros).unwrap(),
            LatticeKind::Boolean.zero()
        );
    }

    #[test]
    fn set_residuals() {
        // f\g entrywise: f(i) -> g(j)
        let f = bset(&[0, 1, 1]);
        let r = residual_right_set(&f, &f).unwrap();
        assert_eq!(r, brel(&[&[1, 1, 1], &[0, 1, 1], &[0, 1, 1]]));
        // g/f is the transpose orientation
        let l = residual_left_set(&f, &f).unwrap();
        assert_eq!(l, brel(&[&[1, 0, 0], &[1, 1, 1], &[1, 1, 1]]));
        assert!(l.is_reflexive().unwrap());
        // product-kind seed used by the fixpoint algorithms
        let p = LatticeKind::Product;
        let tau = FuzzySet::new(p, vec![p.zero(), p.one(), p.zero()]).unwrap();
        let seed = residual_left_set(&tau, &tau).unwrap();
        let expect = grel(
            &[&[(1, 1), (0, 1), (1, 1)], &[(1, 1), (1, 1), (1, 1)], &[(1, 1), (0, 1), (1, 1)]],
            p,
        );
        assert_eq!(seed, expect);
    }

    #[test]
    fn rel_residual_identities() {
        let b = brel(&[&[0, 1, 1], &[1, 0, 0], &[1, 1, 0]]);
        let id = FuzzyRelation::identity(LatticeKind::Boolean, 3);
        assert_eq!(residual_right_rel(&id, &b).unwrap(), b);
        assert_eq!(residual_left_rel(&b, &id).unwrap(), b);
        assert!(residual_right_rel(&b, &b).unwrap().is_reflexive().unwrap());
        assert!(residual_left_rel(&b, &b).unwrap().is_reflexive().unwrap());
    }

    #[test]
    fn rel_residuals_match_bruteforce() {
        // fixed "random" Gödel matrices; brute-force oracle over all k
        let g = LatticeKind::Godel;
        let a = grel(
            &[&[(1, 2), (1, 1), (0, 1)], &[(1, 4), (3, 4), (1, 2)], &[(1, 1), (0, 1), (1, 4)]],
            g,
        );
        let b = grel(
            &[&[(1, 4), (1, 2), (1, 1)], &[(1, 1), (0, 1), (3, 4)], &[(1, 2), (1, 2), (0, 1)]],
            g,
        );
        let right = residual_right_rel(&a, &b).unwrap();
        let left = residual_left_rel(&b, &a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut r_expect = g.one();
                let mut l_expect = g.one();
                for k in 0..3 {
                    r_expect = g
                        .meet(&r_expect, &g.residuum(a.get(k, i), b.get(k, j)).unwrap())
                        .unwrap();
                    l_expect = g
                        .meet(&l_expect, &g.residuum(a.get(j, k), b.get(i, k)).unwrap())
                        .unwrap();
                }
                assert_eq!(*right.get(i, j), r_expect);
                assert_eq!(*left.get(i, j), l_expect);
            }
        }
    }

    #[test]
    fn residual_adjunction_for_relations() {
        let g = LatticeKind::Godel;
        let a = grel(&[&[(1, 2), (1, 1)], &[(1, 4), (0, 1)]], g);
        let b = grel(&[&[(1, 2), (1, 4)], &[(1, 1), (1, 2)]], g);
        let res = residual_right_rel(&a, &b).unwrap();
        // sample x over a small grid of 2x2 Gödel matrices
        let vals = [(0i64, 1i64), (1, 2), (1, 1)];
        for w in 0..81 {
            let mut idx = w;
            let mut es = Vec::new();
            for _ in 0..4 {
                let (p, q) = vals[idx % 3];
                es.push(Tv::rational(p, q));
                idx /= 3;
            }
            let x = FuzzyRelation::new(g, 2, 2, es).unwrap();
            let lhs = compose_rr(&a, &x).unwrap().leq(&b).unwrap();
            let rhs = x.leq(&res).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn quasi_order_predicates() {
        let id = FuzzyRelation::identity(LatticeKind::Boolean, 3);
        assert!(id.is_quasi_order().unwrap());
        let phi = brel(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert!(phi.is_quasi_order().unwrap());
        let full = brel(&[&[1, 1], &[1, 1]]);
        assert!(full.is_quasi_order().unwrap());
        let not_refl = brel(&[&[0, 1], &[1, 1]]);
        assert!(!not_refl.is_quasi_order().unwrap());
    }

    #[test]
    fn distinct_rows_counts() {
        let id = FuzzyRelation::identity(LatticeKind::Boolean, 3);
        assert_eq!(id.distinct_rows().0, 3);
        let ones = brel(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let (n, groups) = ones.distinct_rows();
        assert_eq!(n, 1);
        assert_eq!(groups, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn composition_associativity() {
        for kind in [LatticeKind::Godel, LatticeKind::Lukasiewicz, LatticeKind::Product] {
            let a = grel(&[&[(1, 2), (1, 1)], &[(1, 4), (3, 4)]], kind);
            let b = grel(&[&[(0, 1), (1, 2)], &[(1, 1), (1, 4)]], kind);
            let c = grel(&[&[(3, 4), (1, 1)], &[(1, 2), (0, 1)]], kind);
            let left = compose_rr(&compose_rr(&a, &b).unwrap(), &c).unwrap();
            let right = compose_rr(&a, &compose_rr(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
            let f = FuzzySet::new(kind, vec![Tv::rational(1, 2), Tv::rational(1, 1)]).unwrap();
            let l2 = compose_sr(&compose_sr(&f, &a).unwrap(), &b).unwrap();
            let r2 = compose_sr(&f, &compose_rr(&a, &b).unwrap()).unwrap();
            assert_eq!(l2, r2);
        }
    }

    #[test]
    fn shape_and_kind_errors() {
        let b = brel(&[&[1, 0], &[0, 1]]);
        let g = grel(&[&[(1, 2), (1, 1)], &[(0, 1), (1, 1)]], LatticeKind::Godel);
        assert!(matches!(compose_rr(&b, &g), Err(FzaError::KindMismatch)));
        let wide = brel(&[&[1, 0, 1]]);
        assert!(matches!(
            compose_rr(&b, &wide).map(|_| ()),
            Err(FzaError::DimensionMismatch(_)) | Ok(())
        ));
        assert!(compose_rr(&wide, &b).is_err());
        assert!(wide.is_reflexive().is_err());
        assert!(FuzzyRelation::new(LatticeKind::Boolean, 0, 0, vec![]).is_err());
    }
}
