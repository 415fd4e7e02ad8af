//! Valley and mountain shapes of pendant vectors.

/// Position `t` (1-based) such that `z_1 >= ... >= z_{t-1} > z_t <= z_{t+1}
/// <= ... <= z_k`, with `z_t` the minimum entry and `t <= k - 1` (for `k >= 2`).
pub fn valley_index(z: &[u32]) -> Option<usize> {
    let min = *z.iter().min()?;
    let t = z.iter().position(|&v| v == min)? + 1;
    let ok = z[..t].windows(2).all(|w| w[0] >= w[1])
        && z[t - 1..].windows(2).all(|w| w[0] <= w[1])
        && (z.len() == 1 || t < z.len());
    ok.then_some(t)
}

/// Position `t` (1-based) such that `z_1 <= ... <= z_{t-1} < z_t >= z_{t+1}
/// >= ... >= z_k`, with `t <= k - 1` (for `k >= 2`).
pub fn mountain_index(z: &[u32]) -> Option<usize> {
    let max = *z.iter().max()?;
    let t = z.iter().position(|&v| v == max)? + 1;
    let ok = z[..t].windows(2).all(|w| w[0] <= w[1])
        && z[t - 1..].windows(2).all(|w| w[0] >= w[1])
        && (z.len() == 1 || t < z.len());
    ok.then_some(t)
}

/// Valley index in an orientation with `z_1 >= z_k`, trying both when the
/// ends tie.
pub fn oriented_valley(z: &[u32]) -> Option<(Vec<u32>, usize)> {
    orientations(z)
        .into_iter()
        .filter(|o| o.first() >= o.last())
        .find_map(|o| valley_index(&o).map(|t| (o, t)))
}

/// Mountain index in either orientation.
pub fn oriented_mountain(z: &[u32]) -> Option<(Vec<u32>, usize)> {
    orientations(z).into_iter().find_map(|o| mountain_index(&o).map(|t| (o, t)))
}

fn orientations(z: &[u32]) -> [Vec<u32>; 2] {
    let rev: Vec<u32> = z.iter().rev().copied().collect();
    if rev.as_slice() > z {
        [rev, z.to_vec()]
    } else {
        [z.to_vec(), rev]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valleys() {
        assert_eq!(valley_index(&[1, 0, 0]), Some(2));
        assert_eq!(valley_index(&[0, 0, 0]), Some(1));
        assert_eq!(valley_index(&[3, 1, 0, 0, 2]), Some(3));
        assert_eq!(valley_index(&[2, 1, 0]), None);
        assert_eq!(valley_index(&[1, 2, 0, 1]), None);
        assert_eq!(valley_index(&[4]), Some(1));
        assert_eq!(oriented_valley(&[0, 0, 1]), Some((vec![1, 0, 0], 2)));
        assert_eq!(oriented_valley(&[0, 1, 0]), None);
    }

    #[test]
    fn mountains() {
        assert_eq!(mountain_index(&[0, 1, 0]), Some(2));
        assert_eq!(mountain_index(&[1, 0, 0]), Some(1));
        assert_eq!(mountain_index(&[0, 0, 1]), None);
        assert_eq!(mountain_index(&[0, 2, 1, 2]), None);
        assert_eq!(oriented_mountain(&[0, 0, 1]), Some((vec![1, 0, 0], 1)));
        assert_eq!(oriented_mountain(&[1, 0, 1]), None);
    }
}
