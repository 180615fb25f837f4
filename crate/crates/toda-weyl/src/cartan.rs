//! Generalized and finite Cartan matrices, consecutive index sets and exact
//! inverses.

use std::fmt;

use num::{One, Zero};

use crate::algebra::{display_rational, rat, Family, Rational};
use crate::error::{Error, Result};

/// Shape tag of a Cartan matrix.
///
/// `General` marks derived matrices (inverses, submatrices) whose shape is
/// not one of the named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanFamily {
    AffineA,
    AffineCt,
    FiniteA,
    FiniteB,
    FiniteC,
    General,
}

impl From<Family> for CartanFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::AffineA => CartanFamily::AffineA,
            Family::AffineCt => CartanFamily::AffineCt,
        }
    }
}

/// Entry `k_ij` (1-based) of the affine matrix of the given size.
///
/// Used directly by the generator action so no matrix is materialized on
/// the hot path.
pub fn affine_entry(family: Family, size: usize, i: usize, j: usize) -> i64 {
    if i == j {
        return 2;
    }
    match family {
        Family::AffineA => {
            let d = i.abs_diff(j);
            if d == 1 || d == size - 1 {
                -1
            } else {
                0
            }
        }
        Family::AffineCt => {
            if i.abs_diff(j) != 1 {
                0
            } else if (i == 1 && j == 2) || (i == size && j == size - 1) {
                -2
            } else {
                -1
            }
        }
    }
}

/// Square rational matrix with a family tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    family: CartanFamily,
    entries: Vec<Vec<Rational>>,
}

impl CartanMatrix {
    /// Build the named matrix of the given size.
    ///
    /// Affine families need `size >= 3` (rank `n >= 2`), finite `B` and `C`
    /// need `size >= 2`, finite `A` needs `size >= 1`.
    pub fn build(family: CartanFamily, size: usize) -> Result<Self> {
        let min = match family {
            CartanFamily::AffineA | CartanFamily::AffineCt => 3,
            CartanFamily::FiniteB | CartanFamily::FiniteC => 2,
            CartanFamily::FiniteA => 1,
            CartanFamily::General => {
                return Err(Error::Domain(
                    "no canonical matrix for the General tag".into(),
                ))
            }
        };
        if size < min {
            return Err(Error::Rank(format!(
                "{family:?} needs size at least {min}, got {size}"
            )));
        }
        let entry = |i: usize, j: usize| -> i64 {
            match family {
                CartanFamily::AffineA => affine_entry(Family::AffineA, size, i, j),
                CartanFamily::AffineCt => affine_entry(Family::AffineCt, size, i, j),
                _ if i == j => 2,
                _ if i.abs_diff(j) != 1 => 0,
                CartanFamily::FiniteB if i == size - 1 && j == size => -2,
                CartanFamily::FiniteC if i == size && j == size - 1 => -2,
                _ => -1,
            }
        };
        let entries = (1..=size)
            .map(|i| (1..=size).map(|j| rat(entry(i, j))).collect())
            .collect();
        Ok(CartanMatrix { family, entries })
    }

    pub fn affine(family: Family, n: usize) -> Result<Self> {
        Self::build(family.into(), n + 1)
    }

    pub fn from_rows(family: CartanFamily, entries: Vec<Vec<Rational>>) -> Result<Self> {
        let size = entries.len();
        if entries.iter().any(|row| row.len() != size) {
            return Err(Error::Domain(
                "matrix rows must all have the square size".into(),
            ));
        }
        Ok(CartanMatrix { family, entries })
    }

    pub fn identity(size: usize) -> Self {
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        CartanMatrix {
            family: CartanFamily::General,
            entries,
        }
    }

    pub fn family(&self) -> CartanFamily {
        self.family
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry at row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.size();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        CartanMatrix {
            family: CartanFamily::General,
            entries,
        }
    }

    pub fn mul(&self, other: &CartanMatrix) -> Result<CartanMatrix> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::Domain(format!(
                "size mismatch {n} vs {}",
                other.size()
            )));
        }
        let mut entries = vec![vec![Rational::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    *cell += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        Ok(CartanMatrix {
            family: CartanFamily::General,
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// Exact inverse by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<CartanMatrix> {
        let n = self.size();
        let mut a = self.entries.clone();
        let mut inv = CartanMatrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col + 1)))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &p;
            }
            for x in inv[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let d = &factor * &a[col][c];
                    a[r][c] -= d;
                    let d = &factor * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
        Ok(CartanMatrix {
            family: CartanFamily::General,
            entries: inv,
        })
    }

    /// Tag a derived matrix with a named finite family when its entries match.
    fn recognize(mut self) -> Self {
        let size = self.size();
        for fam in [
            CartanFamily::FiniteA,
            CartanFamily::FiniteB,
            CartanFamily::FiniteC,
        ] {
            if let Ok(m) = CartanMatrix::build(fam, size) {
                if m.entries == self.entries {
                    self.family = fam;
                    return self;
                }
            }
        }
        self.family = CartanFamily::General;
        self
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(display_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Inverse of the finite `A_l` matrix from the closed formula
/// `a^{ij} = min(i,j) (l+1-max(i,j)) / (l+1)`.
pub fn inverse_finite_a(l: usize) -> Result<CartanMatrix> {
    if l == 0 {
        return Err(Error::Rank("finite A needs size at least 1".into()));
    }
    let d = rat((l + 1) as i64);
    let entries = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| rat((i.min(j) * (l + 1 - i.max(j))) as i64) / &d)
                .collect()
        })
        .collect();
    Ok(CartanMatrix {
        family: CartanFamily::General,
        entries,
    })
}

/// A set of indices `{j, .., j+l}` or, in type A, a wrap-around set
/// `{r2, .., n+1, 1, .., r1}` listed in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConsecutiveSet {
    start: usize,
    l: usize,
    wrap: bool,
    elements: Vec<usize>,
}

impl ConsecutiveSet {
    /// `{j, .., j+l}` inside `{1..size}`. The full index set is accepted
    /// here; operations that need a proper subset reject it themselves.
    pub fn new(j: usize, l: usize, size: usize) -> Result<Self> {
        if j == 0 || j + l > size {
            return Err(Error::Domain(format!(
                "set {{{j}..{}}} does not fit in 1..={size}",
                j + l
            )));
        }
        Ok(ConsecutiveSet {
            start: j,
            l,
            wrap: false,
            elements: (j..=j + l).collect(),
        })
    }

    /// `{r2, .., size, 1, .., r1}` with `1 <= r1 < r2 - 1 <= size - 1`.
    pub fn wrap(r2: usize, r1: usize, size: usize) -> Result<Self> {
        if !(r1 >= 1 && r1 + 1 < r2 && r2 <= size) {
            return Err(Error::Domain(format!(
                "wrap set needs 1 <= r1 < r2-1 <= {}, got r2={r2}, r1={r1}",
                size - 1
            )));
        }
        let elements: Vec<usize> = (r2..=size).chain(1..=r1).collect();
        Ok(ConsecutiveSet {
            start: r2,
            l: elements.len() - 1,
            wrap: true,
            elements,
        })
    }

    /// First listed element (`j`, or `r2` for wrap sets).
    pub fn start(&self) -> usize {
        self.start
    }

    /// The length parameter: `|J| = l + 1`.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_wrap(&self) -> bool {
        self.wrap
    }

    /// Last listed element (`j+l`, or `r1` for wrap sets).
    pub fn end(&self) -> usize {
        *self.elements.last().expect("sets are never empty")
    }

    /// Elements in listing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(&i)
    }

    pub fn is_proper(&self, size: usize) -> bool {
        self.len() < size && self.elements.iter().all(|&i| i >= 1 && i <= size)
    }
}

impl fmt::Display for ConsecutiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Restriction of `m` to the rows and columns of `J`, in listing order.
pub fn principal_submatrix(m: &CartanMatrix, set: &ConsecutiveSet) -> Result<CartanMatrix> {
    if !set.is_proper(m.size()) {
        return Err(Error::Domain(format!(
            "{set} is not a proper subset of 1..={}",
            m.size()
        )));
    }
    let entries = set
        .elements()
        .iter()
        .map(|&i| {
            set.elements()
                .iter()
                .map(|&j| m.get(i, j).clone())
                .collect()
        })
        .collect();
    Ok(CartanMatrix {
        family: CartanFamily::General,
        entries,
    }
    .recognize())
}

/// Exact inverse of the principal submatrix on `J`.
pub fn inverse_submatrix(m: &CartanMatrix, set: &ConsecutiveSet) -> Result<CartanMatrix> {
    principal_submatrix(m, set)?.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn ints(m: &CartanMatrix) -> Vec<Vec<i64>> {
        m.rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x.to_integer()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn affine_matrices_at_size_three() {
        let a = CartanMatrix::build(CartanFamily::AffineA, 3).unwrap();
        assert_eq!(
            ints(&a),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        let c = CartanMatrix::build(CartanFamily::AffineCt, 3).unwrap();
        assert_eq!(
            ints(&c),
            vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            ints(&CartanMatrix::build(CartanFamily::FiniteA, 1).unwrap()),
            vec![vec![2]]
        );
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            CartanMatrix::build(CartanFamily::AffineA, 2),
            Err(Error::Rank(_))
        ));
        assert!(matches!(
            CartanMatrix::build(CartanFamily::FiniteB, 1),
            Err(Error::Rank(_))
        ));
        assert!(CartanMatrix::build(CartanFamily::FiniteC, 2).is_ok());
    }

    #[test]
    fn finite_b_and_c_place_the_double_bond() {
        let b = CartanMatrix::build(CartanFamily::FiniteB, 4).unwrap();
        assert_eq!(b.get(3, 4), &rat(-2));
        assert_eq!(b.get(4, 3), &rat(-1));
        let c = CartanMatrix::build(CartanFamily::FiniteC, 4).unwrap();
        assert_eq!(c.get(4, 3), &rat(-2));
        assert_eq!(c.transpose().rows(), b.rows());
    }

    #[test]
    fn finite_a_inverse_formula() {
        assert_eq!(inverse_finite_a(1).unwrap().rows(), &[vec![ratio(1, 2)]]);
        let inv = inverse_finite_a(3).unwrap();
        assert_eq!(inv.get(1, 2), &ratio(1, 2));
        assert_eq!(inv.get(1, 3), &ratio(1, 4));
        for l in 1..=8 {
            let a = CartanMatrix::build(CartanFamily::FiniteA, l).unwrap();
            let inv = inverse_finite_a(l).unwrap();
            assert!(a.mul(&inv).unwrap().is_identity());
            assert_eq!(a.inverse().unwrap(), inv);
        }
    }

    #[test]
    fn submatrices() {
        let a4 = CartanMatrix::build(CartanFamily::AffineA, 5).unwrap();
        let j = ConsecutiveSet::new(1, 1, 5).unwrap();
        let sub = principal_submatrix(&a4, &j).unwrap();
        assert_eq!(ints(&sub), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(sub.family(), CartanFamily::FiniteA);

        let w = ConsecutiveSet::wrap(4, 1, 5).unwrap();
        assert_eq!(w.elements(), &[4, 5, 1]);
        let sub = principal_submatrix(&a4, &w).unwrap();
        assert_eq!(
            ints(&sub),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );

        let c3 = CartanMatrix::build(CartanFamily::AffineCt, 4).unwrap();
        let sub = principal_submatrix(&c3, &ConsecutiveSet::new(3, 1, 4).unwrap()).unwrap();
        assert_eq!(ints(&sub), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(sub.family(), CartanFamily::FiniteC);

        let full = ConsecutiveSet::new(1, 4, 5).unwrap();
        assert!(matches!(
            principal_submatrix(&a4, &full),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn submatrix_inverses() {
        let a2 = CartanMatrix::build(CartanFamily::AffineA, 3).unwrap();
        let inv = inverse_submatrix(&a2, &ConsecutiveSet::new(1, 0, 3).unwrap()).unwrap();
        assert_eq!(inv.rows(), &[vec![ratio(1, 2)]]);
        let inv = inverse_submatrix(&a2, &ConsecutiveSet::new(1, 1, 3).unwrap()).unwrap();
        assert_eq!(
            inv.rows(),
            &[
                vec![ratio(2, 3), ratio(1, 3)],
                vec![ratio(1, 3), ratio(2, 3)]
            ]
        );
        let c2 = CartanMatrix::build(CartanFamily::AffineCt, 3).unwrap();
        let inv = inverse_submatrix(&c2, &ConsecutiveSet::new(2, 1, 3).unwrap()).unwrap();
        assert_eq!(
            inv.rows(),
            &[vec![rat(1), ratio(1, 2)], vec![rat(1), rat(1)]]
        );
    }

    #[test]
    fn affine_matrices_are_singular() {
        for size in 3..8 {
            for fam in [CartanFamily::AffineA, CartanFamily::AffineCt] {
                let m = CartanMatrix::build(fam, size).unwrap();
                assert!(matches!(m.inverse(), Err(Error::Singular(_))));
            }
        }
    }

    #[test]
    fn affine_a_is_rotation_invariant() {
        for size in 3..9 {
            let m = CartanMatrix::build(CartanFamily::AffineA, size).unwrap();
            for i in 1..=size {
                for j in 1..=size {
                    assert_eq!(m.get(i, j), m.get(i % size + 1, j % size + 1));
                }
            }
        }
    }

    #[test]
    fn consecutive_submatrices_have_finite_shapes() {
        for n in 2..8 {
            let size = n + 1;
            let a = CartanMatrix::build(CartanFamily::AffineA, size).unwrap();
            let c = CartanMatrix::build(CartanFamily::AffineCt, size).unwrap();
            for j in 1..=size {
                for l in 0..n {
                    if j + l > size {
                        continue;
                    }
                    let set = ConsecutiveSet::new(j, l, size).unwrap();
                    let sub = principal_submatrix(&a, &set).unwrap();
                    assert_eq!(
                        sub.rows(),
                        CartanMatrix::build(CartanFamily::FiniteA, l + 1)
                            .unwrap()
                            .rows()
                    );
                    let sub = principal_submatrix(&c, &set).unwrap();
                    if l >= 1 && j + l == size {
                        assert_eq!(sub.family(), CartanFamily::FiniteC);
                    } else if l >= 1 && j == 1 {
                        // head sets are the C shape listed in reverse order
                        let rev: Vec<Vec<Rational>> = sub
                            .rows()
                            .iter()
                            .rev()
                            .map(|r| r.iter().rev().cloned().collect())
                            .collect();
                        assert_eq!(
                            rev,
                            CartanMatrix::build(CartanFamily::FiniteC, l + 1)
                                .unwrap()
                                .rows()
                        );
                    } else if l >= 1 {
                        assert_eq!(sub.family(), CartanFamily::FiniteA);
                    }
                }
            }
        }
    }

    #[test]
    fn wrap_set_bounds() {
        assert!(ConsecutiveSet::wrap(3, 2, 5).is_err());
        assert!(ConsecutiveSet::wrap(5, 1, 5).is_ok());
        assert!(ConsecutiveSet::wrap(6, 1, 5).is_err());
        assert!(ConsecutiveSet::wrap(3, 0, 5).is_err());
    }
}
