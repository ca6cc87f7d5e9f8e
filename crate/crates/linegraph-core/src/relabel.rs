//! Matrix relabeling: label swapping, group label swapping, and the full
//! relabeling pass that orders a LAM for endnode recognition.
//!
//! Everything here is 0-based. The metacode this implements is 1-based, so
//! each operation documents its translation; getting that translation wrong
//! is the single most likely porting bug.

use thiserror::Error;

use crate::matrix::SymBitMatrix;

/// A link adjacency matrix. Structurally just a symmetric 0/1 matrix with
/// zero diagonal; whether it really is the LAM of some graph is only
/// certified a posteriori, by a successful reconstruction plus verification.
pub type Lam = SymBitMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelabelError {
    #[error("matrix has order zero")]
    Empty,
    #[error("underlying graph is disconnected; split into components first")]
    DisconnectedInput,
}

/// Bijection old label -> new label over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    forward: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Permutation {
        Permutation {
            forward: (0..len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// New label of `old`.
    pub fn apply(&self, old: usize) -> usize {
        self.forward[old]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.forward.len()];
        for (old, &new) in self.forward.iter().enumerate() {
            inv[new] = old;
        }
        Permutation { forward: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Result of a full relabeling pass.
///
/// `relabeled(i, j) == original(perm⁻¹(i), perm⁻¹(j))` for all i, j, and the
/// counters are the sums over the relabeled matrix:
/// s1 = Σ_{i≥1} c(0,i), s2 = Σ_{i=2..s1} c(1,i), s3 = Σ_{i=3..s2+1} c(2,i)
/// (0-based translations of the 1-based definitions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabelResult {
    pub lam: Lam,
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub permutation: Permutation,
}

/// A LAM being relabeled, with eager permutation tracking: every label swap
/// composes one transposition at O(1) bookkeeping cost.
#[derive(Clone, Debug)]
pub struct Relabeling {
    matrix: SymBitMatrix,
    forward: Vec<usize>,  // old label -> current label
    backward: Vec<usize>, // current label -> old label
}

impl Relabeling {
    pub fn new(lam: &Lam) -> Relabeling {
        let n = lam.order();
        Relabeling {
            matrix: lam.clone(),
            forward: (0..n).collect(),
            backward: (0..n).collect(),
        }
    }

    pub fn matrix(&self) -> &SymBitMatrix {
        &self.matrix
    }

    /// Swaps the labels of links `j` and `k`: conjugation by the
    /// transposition (j k). Rows and columns j, k are exchanged while the
    /// entry (j, k) itself stays put. `j == k` is a permitted no-op;
    /// out-of-range labels panic.
    ///
    /// Translation: with j < k, this swaps (i,j)<->(i,k) for i < j,
    /// (j,i)<->(i,k) for j < i < k, and (j,i)<->(k,i) for i > k -- the three
    /// regions of the 1-based metacode shifted down by one.
    pub fn swap_label(&mut self, j: usize, k: usize) {
        let n = self.matrix.order();
        assert!(j < n && k < n, "label out of range: ({j}, {k}) with order {n}");
        if j == k {
            return;
        }
        let (j, k) = if j < k { (j, k) } else { (k, j) };
        for i in 0..j {
            let (a, b) = (self.matrix.get(i, j), self.matrix.get(i, k));
            self.matrix.set(i, j, b);
            self.matrix.set(i, k, a);
        }
        for i in (j + 1)..k {
            let (a, b) = (self.matrix.get(j, i), self.matrix.get(i, k));
            self.matrix.set(j, i, b);
            self.matrix.set(i, k, a);
        }
        for i in (k + 1)..n {
            let (a, b) = (self.matrix.get(j, i), self.matrix.get(k, i));
            self.matrix.set(j, i, b);
            self.matrix.set(k, i, a);
        }
        let a = self.backward[j];
        let b = self.backward[k];
        self.forward[a] = k;
        self.forward[b] = j;
        self.backward.swap(j, k);
    }

    /// Group label swapping over row `row`, window columns `start..end`,
    /// with `ones` the number of 1-entries in the window.
    ///
    /// Pairs the m-th misplaced 0 (in `start..start+ones`) with the m-th
    /// misplaced 1 (in `start+ones..end`), in ascending index order, and
    /// swaps those labels. Afterwards the window reads all 1s then all 0s.
    ///
    /// Translation from the 1-based metacode `GroupLabelSwapping(C,u,k,a,b)`:
    /// `row = k-1`, `start = u`, `end = b`, `ones = a`.
    /// The `ones` count must match the actual window sum; a mismatch means a
    /// caller bug, not bad input data, and panics.
    pub fn group_label_swapping(&mut self, row: usize, start: usize, end: usize, ones: usize) {
        let end = end.min(self.matrix.order());
        if start >= end {
            assert_eq!(ones, 0, "nonempty target in an empty window");
            return;
        }
        assert!(start + ones <= end, "window sum exceeds window width");
        let mut zeros_in_front = Vec::new();
        for i in start..start + ones {
            if !self.matrix.get(row, i) {
                zeros_in_front.push(i);
            }
        }
        let mut ones_in_back = Vec::new();
        for i in start + ones..end {
            if self.matrix.get(row, i) {
                ones_in_back.push(i);
            }
        }
        assert_eq!(
            zeros_in_front.len(),
            ones_in_back.len(),
            "group swap lists out of balance: caller passed a wrong window sum"
        );
        for (&x, &y) in zeros_in_front.iter().zip(&ones_in_back) {
            self.swap_label(x, y);
        }
    }

    pub fn finish(self) -> (SymBitMatrix, Permutation) {
        (
            self.matrix,
            Permutation {
                forward: self.forward,
            },
        )
    }
}

/// Full matrix relabeling pass.
///
/// 1-based metacode translated one-for-one: sort row 0 over columns 1..L,
/// row 1 over 2..s1+1, row 2 over 3..s2+2, then sweep rows k = 1, 2, ...
/// over the unclaimed tail while `s̄ < L`. On connected inputs the tail
/// shrinks to nothing; a disconnected input stalls with `s̄ < L` after the
/// row counter runs out and is reported as such.
pub fn matrix_relabeling(lam: &Lam) -> Result<RelabelResult, RelabelError> {
    let l = lam.order();
    if l == 0 {
        return Err(RelabelError::Empty);
    }
    let mut r = Relabeling::new(lam);

    let s1 = r.matrix.row_sum(0, 1, l);
    r.group_label_swapping(0, 1, l, s1);
    let s2 = if l >= 2 { r.matrix.row_sum(1, 2, s1 + 1) } else { 0 };
    if l >= 2 {
        r.group_label_swapping(1, 2, s1 + 1, s2);
    }
    let s3 = if l >= 3 { r.matrix.row_sum(2, 3, s2 + 2) } else { 0 };
    if l >= 3 {
        r.group_label_swapping(2, 3, s2 + 2, s3);
    }

    let mut claimed = s1 + 1;
    let mut k = 1usize; // 1-based row 2
    while claimed < l && k <= l - 1 {
        let s = r.matrix.row_sum(k, claimed, l);
        r.group_label_swapping(k, claimed, l, s);
        k += 1;
        claimed += s;
    }
    if claimed < l {
        return Err(RelabelError::DisconnectedInput);
    }

    let (lam, permutation) = r.finish();
    Ok(RelabelResult {
        lam,
        s1,
        s2,
        s3,
        permutation,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("criterion requires at least 3 left-neighboring links, got {0}")]
    TooFewLeftNeighbors(usize),
    #[error("pattern of order {need} does not fit in a matrix of order {have}")]
    OrderTooSmall { need: usize, have: usize },
}

/// Checks the neighboring-link pattern criterion on the leading principal
/// submatrix of order `1 + n_left + n_right`:
///
/// - row 0 is all 1s across the pattern,
/// - the leading triangle through column `n_left` is all 1s,
/// - the cross block (rows 1..=n_left, columns n_left+1..) has at most one
///   1-entry per row and per column,
/// - the trailing triangle from row `n_left + 1` on is all 1s.
///
/// Applicable only when `n_left >= 3`.
pub fn validate_neighboring_pattern(
    c: &Lam,
    n_left: usize,
    n_right: usize,
) -> Result<bool, PatternError> {
    if n_left < 3 {
        return Err(PatternError::TooFewLeftNeighbors(n_left));
    }
    let order = 1 + n_left + n_right;
    if c.order() < order {
        return Err(PatternError::OrderTooSmall {
            need: order,
            have: c.order(),
        });
    }
    for j in 1..order {
        if !c.get(0, j) {
            return Ok(false);
        }
    }
    for i in 1..=n_left {
        for j in (i + 1)..=n_left {
            if !c.get(i, j) {
                return Ok(false);
            }
        }
    }
    for i in 1..=n_left {
        if c.row_sum(i, n_left + 1, order) > 1 {
            return Ok(false);
        }
    }
    for j in (n_left + 1)..order {
        let col_ones = (1..=n_left).filter(|&i| c.get(i, j)).count();
        if col_ones > 1 {
            return Ok(false);
        }
    }
    for i in (n_left + 1)..order {
        for j in (i + 1)..order {
            if !c.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Scans a relabeled matrix against the four post-relabeling conditions plus
/// the nonincreasing top-entry curve. Returns human-readable violations;
/// empty means all hold.
///
/// 0-based translations checked:
/// (a) row 0 reads 1 on columns 1..=s1 and 0 beyond;
/// (b) row 1 reads 1 on 2..=s2+1 (when s2 >= 1) and 0 on s2+2..=s1 (when
///     s1 >= s2+2);
/// (c) row 2 reads 1 on 3..=s3+2 (when s3 >= 1) and 0 on s3+3..=s2+1 (when
///     s2 >= s3+2);
/// (d) first-discovery order: the first row holding a 1 in column j, over
///     j > s1, never decreases as j grows, and always lies above j.
///
/// The curve condition subsumes (d): the row of the topmost 1-entry per
/// column must be nondecreasing in the column index across the whole matrix
/// (the curve drawn over the columns never climbs back up).
pub fn postcondition_violations(c: &Lam, s1: usize, s2: usize, s3: usize) -> Vec<String> {
    let l = c.order();
    let mut bad = Vec::new();
    for i in 1..l {
        let expect = i <= s1;
        if c.get(0, i) != expect {
            bad.push(format!("(a): c(0,{i}) = {}, want {}", c.get(0, i) as u8, expect as u8));
        }
    }
    if l >= 2 {
        if s2 >= 1 {
            for i in 2..=(s2 + 1).min(l - 1) {
                if !c.get(1, i) {
                    bad.push(format!("(b): c(1,{i}) = 0 inside the 1-run"));
                }
            }
        }
        if s1 >= s2 + 2 {
            for i in (s2 + 2)..=s1.min(l - 1) {
                if c.get(1, i) {
                    bad.push(format!("(b): c(1,{i}) = 1 inside the 0-run"));
                }
            }
        }
    }
    if l >= 3 {
        if s3 >= 1 {
            for i in 3..=(s3 + 2).min(l - 1) {
                if !c.get(2, i) {
                    bad.push(format!("(c): c(2,{i}) = 0 inside the 1-run"));
                }
            }
        }
        if s2 >= s3 + 2 {
            for i in (s3 + 3)..=(s2 + 1).min(l - 1) {
                if c.get(2, i) {
                    bad.push(format!("(c): c(2,{i}) = 1 inside the 0-run"));
                }
            }
        }
    }
    // top-entry curve: for every column j >= 1, the smallest row above j
    // holding a 1 exists and never decreases with j
    let mut prev_top = 0usize;
    for j in 1..l {
        let top = (0..j).find(|&i| c.get(i, j));
        match top {
            None => bad.push(format!("curve: column {j} has no 1-entry above the diagonal")),
            Some(t) => {
                if t < prev_top {
                    bad.push(format!(
                        "curve: top entry of column {j} is row {t}, above row {prev_top} of column {}",
                        j - 1
                    ));
                } else {
                    prev_top = t;
                }
            }
        }
    }
    bad
}
