//! Finite semigroups given by their full multiplication table.
//!
//! Elements are identified by `0`-based index everywhere; names only matter
//! at the I/O boundary. The table is row-major with the row index being the
//! *left* factor: `table[i][j]` is the index of `(element i) · (element j)`.

use std::collections::BTreeSet;

use thiserror::Error;

/// Errors raised while validating a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("{n} names given but the table is {rows} row(s) of width {width}")]
    Dimensions { n: usize, rows: usize, width: usize },
    #[error("table entry ({row},{col}) is {entry}, out of range for {n} elements")]
    BadIndex {
        row: usize,
        col: usize,
        entry: usize,
        n: usize,
    },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}` (must be non-empty, no whitespace, no '#')")]
    InvalidName(String),
    #[error("not associative: ({i}·{j})·{k} differs from {i}·({j}·{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
}

/// A witness that an element has a non-trivial period: `s^index` starts a
/// cycle of length `period` in the sequence of powers of `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodWitness {
    pub element: usize,
    pub index: usize,
    pub period: usize,
}

/// A finite semigroup: named elements plus a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

/// A subsemigroup together with the index of each of its elements in the
/// parent semigroup.
#[derive(Debug, Clone)]
pub struct Subsemigroup {
    pub semigroup: FiniteSemigroup,
    pub embedding: Vec<usize>,
}

/// The image of the left-regular representation `a ↦ λ_a` where
/// `λ_a(x) = ax`.
#[derive(Debug, Clone)]
pub struct LeftRegular {
    /// The transformations `λ_a` under composition, as a semigroup. Elements
    /// are named after the smallest representative of each collapsed class.
    pub image: FiniteSemigroup,
    /// Index in the parent of the representative of each image element.
    pub representatives: Vec<usize>,
    /// For each parent element, the image element its row collapses to.
    pub projection: Vec<usize>,
    /// All pairs `a < b` with `λ_a = λ_b`.
    pub kernel_pairs: Vec<(usize, usize)>,
}

impl LeftRegular {
    /// The representation is faithful exactly when no two rows coincide.
    pub fn faithful(&self) -> bool {
        self.kernel_pairs.is_empty()
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.contains(char::is_whitespace) && !name.contains('#')
}

impl FiniteSemigroup {
    /// Validates names and table and returns the semigroup if every
    /// invariant holds: entries in range, names usable, multiplication
    /// associative (exhaustive triple check).
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ValidationError> {
        let n = names.len();
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            let width = table.first().map_or(0, |r| r.len());
            return Err(ValidationError::Dimensions {
                n,
                rows: table.len(),
                width,
            });
        }
        for name in &names {
            if !valid_name(name) {
                return Err(ValidationError::InvalidName(name.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(ValidationError::DuplicateName(name.clone()));
            }
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if entry >= n {
                    return Err(ValidationError::BadIndex {
                        row: i,
                        col: j,
                        entry,
                        n,
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = table[i][j];
                for k in 0..n {
                    if table[ij][k] != table[i][table[j][k]] {
                        return Err(ValidationError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(FiniteSemigroup { names, table })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The product of element `i` (left factor) and element `j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.table[i]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.table[i][i] == i
    }

    /// Every element idempotent?
    pub fn is_band(&self) -> bool {
        self.non_idempotent().is_none()
    }

    /// The smallest-index non-idempotent element, if any.
    pub fn non_idempotent(&self) -> Option<usize> {
        (0..self.size()).find(|&i| !self.is_idempotent(i))
    }

    /// Index and period of an element: the least `(k, p)` with
    /// `s^k = s^(k+p)`.
    pub fn index_period(&self, element: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.size()];
        let mut power = element;
        let mut exp = 1usize;
        loop {
            if seen[power] != usize::MAX {
                let first = seen[power];
                return (first, exp - first);
            }
            seen[power] = exp;
            power = self.table[power][element];
            exp += 1;
        }
    }

    /// True when every element has period 1 (equivalently, `s^k = s^(k+1)`
    /// for some `k`).
    pub fn is_aperiodic(&self) -> bool {
        self.period_witness().is_none()
    }

    /// The smallest-index element with period greater than 1, if any.
    pub fn period_witness(&self) -> Option<PeriodWitness> {
        (0..self.size()).find_map(|element| {
            let (index, period) = self.index_period(element);
            (period > 1).then_some(PeriodWitness {
                element,
                index,
                period,
            })
        })
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.size())
            .find(|&e| (0..self.size()).all(|s| self.table[e][s] == s && self.table[s][e] == s))
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    /// For every `s`, do there exist `e, f` with `se = s` and `fs = s`?
    pub fn has_relative_identities(&self) -> bool {
        (0..self.size()).all(|s| {
            (0..self.size()).any(|e| self.table[s][e] == s)
                && (0..self.size()).any(|f| self.table[f][s] == s)
        })
    }

    /// The absorbing zero (`zs = sz = z` for all `s`), if one exists.
    pub fn zero(&self) -> Option<usize> {
        (0..self.size())
            .find(|&z| (0..self.size()).all(|s| self.table[z][s] == z && self.table[s][z] == z))
    }

    /// The set of all products `{xy : x, y ∈ S}` as a subsemigroup.
    pub fn square(&self) -> Subsemigroup {
        let n = self.size();
        let mut in_square = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                in_square[self.table[i][j]] = true;
            }
        }
        self.subsemigroup(&in_square)
    }

    /// Restricts to a subset already closed under multiplication.
    fn subsemigroup(&self, included: &[bool]) -> Subsemigroup {
        let embedding: Vec<usize> = (0..self.size()).filter(|&i| included[i]).collect();
        let mut local = vec![usize::MAX; self.size()];
        for (sub, &parent) in embedding.iter().enumerate() {
            local[parent] = sub;
        }
        let names = embedding.iter().map(|&i| self.names[i].clone()).collect();
        let table = embedding
            .iter()
            .map(|&i| {
                embedding
                    .iter()
                    .map(|&j| {
                        let p = self.table[i][j];
                        debug_assert!(included[p], "subset not closed under multiplication");
                        local[p]
                    })
                    .collect()
            })
            .collect();
        let semigroup =
            FiniteSemigroup::new(names, table).expect("subsemigroup of a valid semigroup");
        Subsemigroup {
            semigroup,
            embedding,
        }
    }

    /// Same elements, transposed table. An involution up to structural
    /// equality.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.size();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i]).collect())
            .collect();
        FiniteSemigroup {
            names: self.names.clone(),
            table,
        }
    }

    /// Direct product with componentwise multiplication; elements named
    /// `(s,t)`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let (n, m) = (self.size(), other.size());
        let mut names = Vec::with_capacity(n * m);
        let mut table = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                names.push(format!("({},{})", self.names[i], other.names[j]));
            }
        }
        for i in 0..n {
            for j in 0..m {
                let mut row = Vec::with_capacity(n * m);
                for k in 0..n {
                    for l in 0..m {
                        row.push(self.table[i][k] * m + other.table[j][l]);
                    }
                }
                table.push(row);
            }
        }
        FiniteSemigroup::new(names, table).expect("product of valid semigroups")
    }

    /// The least `k` with `S^k = {z}` for an absorbing zero `z`, when the
    /// descending chain of power sets reaches one.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let z = self.zero()?;
        let n = self.size();
        let mut current: Vec<bool> = vec![true; n];
        let mut k = 1usize;
        loop {
            let count = current.iter().filter(|&&b| b).count();
            if count == 1 && current[z] {
                return Some(k);
            }
            let mut next = vec![false; n];
            for x in 0..n {
                if current[x] {
                    for y in 0..n {
                        next[self.table[x][y]] = true;
                    }
                }
            }
            if next == current {
                return None;
            }
            current = next;
            k += 1;
        }
    }

    /// The left-regular representation: each element's table row viewed as a
    /// transformation, collapsed to distinct rows and composed.
    pub fn left_regular(&self) -> LeftRegular {
        let n = self.size();
        let mut representatives: Vec<usize> = Vec::new();
        let mut projection = Vec::with_capacity(n);
        for a in 0..n {
            match representatives
                .iter()
                .position(|&r| self.table[r] == self.table[a])
            {
                Some(found) => projection.push(found),
                None => {
                    projection.push(representatives.len());
                    representatives.push(a);
                }
            }
        }
        let mut kernel_pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if projection[a] == projection[b] {
                    kernel_pairs.push((a, b));
                }
            }
        }
        let names = representatives
            .iter()
            .map(|&r| self.names[r].clone())
            .collect();
        // λ_a ∘ λ_b = λ_{ab}, so the image product is inherited.
        let table = representatives
            .iter()
            .map(|&a| {
                representatives
                    .iter()
                    .map(|&b| projection[self.table[a][b]])
                    .collect()
            })
            .collect();
        let image =
            FiniteSemigroup::new(names, table).expect("left-regular image of a valid semigroup");
        LeftRegular {
            image,
            representatives,
            projection,
            kernel_pairs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn named(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn validates_four_element_example() {
        let s = example_table(ExampleTable::NonBand);
        assert_eq!(s.size(), 4);
        assert_eq!(s.mul(0, 3), 2); // a·d = c
    }

    #[test]
    fn validates_trivial_semigroup() {
        let s = FiniteSemigroup::new(named(&["e"]), vec![vec![0]]).unwrap();
        assert_eq!(s.size(), 1);
        assert!(s.is_band());
    }

    #[test]
    fn rejects_non_associative_table() {
        let err =
            FiniteSemigroup::new(named(&["p", "q"]), vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, ValidationError::NotAssociative { i: 0, j: 0, k: 1 });
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            FiniteSemigroup::new(named(&["e"]), vec![vec![7]]).unwrap_err(),
            ValidationError::BadIndex {
                row: 0,
                col: 0,
                entry: 7,
                n: 1
            }
        );
        assert_eq!(
            FiniteSemigroup::new(named(&["e", "e"]), vec![vec![0, 0], vec![0, 0]]).unwrap_err(),
            ValidationError::DuplicateName("e".into())
        );
        assert_eq!(
            FiniteSemigroup::new(named(&["a b"]), vec![vec![0]]).unwrap_err(),
            ValidationError::InvalidName("a b".into())
        );
        assert_eq!(
            FiniteSemigroup::new(named(&["e"]), vec![]).unwrap_err(),
            ValidationError::Dimensions {
                n: 1,
                rows: 0,
                width: 0
            }
        );
    }

    #[test]
    fn band_detection_with_witness() {
        assert!(left_zero(3).unwrap().is_band());
        let s = example_table(ExampleTable::NonBand);
        assert!(!s.is_band());
        assert_eq!(s.non_idempotent(), Some(0)); // a·a = b
    }

    #[test]
    fn aperiodicity() {
        let z2 = cyclic_group(2).unwrap();
        let witness = z2.period_witness().unwrap();
        assert_eq!(
            witness,
            PeriodWitness {
                element: 1,
                index: 1,
                period: 2
            }
        );
        assert!(example_table(ExampleTable::NonBand).is_aperiodic());
        assert!(rectangular_band(2, 3).unwrap().is_aperiodic());
    }

    #[test]
    fn identity_and_relative_identities() {
        assert_eq!(chain_semilattice(2).unwrap().identity(), Some(0));
        let lz = left_zero(2).unwrap();
        assert_eq!(lz.identity(), None);
        assert!(lz.has_relative_identities());
        let nil = nilpotent_monogenic(3).unwrap();
        assert!(!nil.is_monoid());
        assert!(!nil.has_relative_identities());
    }

    #[test]
    fn square_of_examples() {
        let s = example_table(ExampleTable::NonBand);
        let sq = s.square();
        assert_eq!(sq.embedding, vec![1, 2, 3]); // {b, c, d}
        assert!(sq.semigroup.is_band());

        let s = example_table(ExampleTable::Collapse);
        assert_eq!(s.square().embedding, vec![0, 1, 2]); // {a, b, c}

        let band = rectangular_band(2, 2).unwrap();
        assert_eq!(band.square().semigroup, band);
    }

    #[test]
    fn opposite_is_an_involution() {
        let s = example_table(ExampleTable::NonBand);
        let op = s.opposite();
        assert_ne!(op, s);
        assert_eq!(op.opposite(), s);
        // Transposing preserves associativity.
        assert!(FiniteSemigroup::new(op.names().to_vec(), op.table().to_vec()).is_ok());

        let commutative = chain_semilattice(3).unwrap();
        assert_eq!(commutative.opposite(), commutative);

        let lz = left_zero(2).unwrap();
        let rz = lz.opposite();
        assert_eq!(rz.table(), &[vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn direct_product_basics() {
        let p = left_zero(2).unwrap().direct_product(&left_zero(3).unwrap());
        assert_eq!(p.size(), 6);
        assert!(p.is_band());
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotent_monogenic(3).unwrap().nilpotency_class(), Some(3));
        assert_eq!(left_zero(2).unwrap().nilpotency_class(), None);
        let trivial = FiniteSemigroup::new(named(&["e"]), vec![vec![0]]).unwrap();
        assert_eq!(trivial.nilpotency_class(), Some(1));
    }

    #[test]
    fn left_regular_representation() {
        let s = example_table(ExampleTable::NonBand);
        let lrr = s.left_regular();
        assert!(lrr.faithful());
        assert_eq!(lrr.image.size(), 4);

        let rz = right_zero(2).unwrap();
        let lrr = rz.left_regular();
        assert!(!lrr.faithful());
        assert_eq!(lrr.kernel_pairs, vec![(0, 1)]);
        assert_eq!(lrr.image.size(), 1);

        let collapse = example_table(ExampleTable::Collapse);
        let lrr = collapse.left_regular();
        assert_eq!(lrr.kernel_pairs, vec![(0, 1), (0, 3), (1, 3)]);
        assert_eq!(lrr.image.size(), 2);
    }
}
