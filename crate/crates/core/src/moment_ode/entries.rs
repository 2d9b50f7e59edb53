use num_traits::Num;

fn int<T: Num + Clone>(n: usize) -> T {
    (0..n).fold(T::zero(), |acc, _| acc + T::one())
}

/// Nonzero entries of the pair-correlation operator, kept as expressions in
/// `(d, lambda, a, b)` so that identities can be checked in exact arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct GEntries<T> {
    /// Diagonal at `x != O`: `-4 a lambda d`.
    pub diag: T,
    /// Each of the `2d` neighbors of `x != O`: `2 a lambda`.
    pub neighbor: T,
    /// Diagonal at `O`: `1 - 4 d lambda (a + b - 1) + 2 d lambda (b^2 - 1) + 2 d lambda a^2`.
    pub origin_diag: T,
    /// Each unit displacement in the `O` row: `2 a b lambda` (so `4 a b d lambda` in total).
    pub origin_unit: T,
}

impl<T: Num + Clone> GEntries<T> {
    pub fn new(dim: usize, lambda: T, a: T, b: T) -> Self {
        let d: T = int(dim);
        let two: T = int(2);
        let four: T = int(4);
        let one = T::one();
        let diag = T::zero() - four.clone() * a.clone() * lambda.clone() * d.clone();
        let neighbor = two.clone() * a.clone() * lambda.clone();
        let origin_diag = one.clone()
            - four * d.clone() * lambda.clone() * (a.clone() + b.clone() - one.clone())
            + two.clone() * d.clone() * lambda.clone() * (b.clone() * b.clone() - one)
            + two.clone() * d * lambda.clone() * a.clone() * a.clone();
        let origin_unit = two * a * b * lambda;
        Self {
            diag,
            neighbor,
            origin_diag,
            origin_unit,
        }
    }

    /// The origin diagonal written with `(b - 1)` and `a` split:
    /// `1 - 4 d lambda (b - 1) - 4 d lambda a + 2 d lambda (b^2 - 1) + 2 d lambda a^2`.
    pub fn origin_diag_split(dim: usize, lambda: T, a: T, b: T) -> T {
        let d: T = int(dim);
        let two: T = int(2);
        let four: T = int(4);
        let one = T::one();
        one.clone() - four.clone() * d.clone() * lambda.clone() * (b.clone() - one.clone())
            - four * d.clone() * lambda.clone() * a.clone()
            + two.clone() * d.clone() * lambda.clone() * (b.clone() * b - one)
            + two * d * lambda * a.clone() * a
    }

    /// Sum of the `x != O` row.
    pub fn interior_row_sum(&self, dim: usize) -> T {
        self.diag.clone() + int::<T>(2 * dim) * self.neighbor.clone()
    }
}
