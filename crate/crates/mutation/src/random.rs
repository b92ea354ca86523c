use rand::Rng;

use crate::ExchangeMatrix;

/// Random m×n exchange matrix with a skew-symmetrizable principal part.
///
/// The symmetrizer is drawn from {1, 2, 3}; each unordered pair gets a common
/// multiplier s so that d_i b_ij = −d_j b_ji holds by construction.
pub fn random_skew_symmetrizable<R: Rng>(rng: &mut R, n: usize, frozen: usize, bound: i64) -> ExchangeMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let m = n + frozen;
    let mut rows = vec![vec![0i64; n]; m];
    for i in 0..n {
        for j in i + 1..n {
            let s = rng.gen_range(-bound..=bound);
            let g = num::integer::gcd(d[i], d[j]);
            rows[i][j] = s * d[j] / g;
            rows[j][i] = -s * d[i] / g;
        }
    }
    for row in rows.iter_mut().skip(n) {
        for x in row.iter_mut() {
            *x = rng.gen_range(-bound..=bound);
        }
    }
    let labels = (1..=n as i32).chain((1..=frozen as i32).map(|x| -x)).collect();
    ExchangeMatrix::new(labels, n, rows).expect("symmetrizable by construction")
}
