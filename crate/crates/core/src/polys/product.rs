use num_traits::Num;

/// Value and the first `K - 1` derivatives of `w -> prod_m (w - r_m)` at a
/// point, given the differences `w - r_m`.
///
/// Uses the recurrence `p^(k) <- p^(k) (w - r) + k p^(k-1)` which never forms
/// monomial coefficients.
pub fn product_derivatives<T, const K: usize>(diffs: impl IntoIterator<Item = T>) -> [T; K]
where
    T: Num + Copy + From<f64>,
{
    let mut out = [T::zero(); K];
    if K == 0 {
        return out;
    }
    out[0] = T::one();
    for delta in diffs {
        for k in (1..K).rev() {
            out[k] = out[k] * delta + T::from(k as f64) * out[k - 1];
        }
        out[0] = out[0] * delta;
    }
    out
}
