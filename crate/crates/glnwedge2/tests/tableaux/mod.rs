//! Independent tableau-counting oracle for the acceptance suite. Counts
//! semistandard Young tableaux directly by backtracking; shares nothing with
//! the Gram-matrix path it checks.

/// Partitions of d into at most n parts, padded with zeros to length n,
/// in decreasing lexicographic order.
pub fn partitions_into(d: i64, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut acc: Vec<i64> = Vec::new();
    fn rec(acc: &mut Vec<i64>, n: usize, rem: i64, out: &mut Vec<Vec<i64>>) {
        if acc.len() == n {
            if rem == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let hi = if acc.is_empty() {
            rem
        } else {
            rem.min(acc[acc.len() - 1])
        };
        for v in (0..=hi).rev() {
            acc.push(v);
            rec(acc, n, rem - v, out);
            acc.pop();
        }
    }
    rec(&mut acc, n, d, &mut out);
    out
}

/// Number of semistandard Young tableaux of the given shape (a partition,
/// possibly zero-padded) and content (any composition): row-weakly and
/// column-strictly increasing fillings where value v appears content[v-1]
/// times.
pub fn kostka(shape: &[i64], content: &[i64]) -> usize {
    let rows: Vec<usize> = shape
        .iter()
        .take_while(|&&r| r > 0)
        .map(|&r| r as usize)
        .collect();
    let total: i64 = rows.iter().map(|&r| r as i64).sum();
    if total != content.iter().sum::<i64>() {
        return 0;
    }
    if rows.is_empty() {
        return 1;
    }
    let nvals = content.len();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut tab: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![0i64; nvals];
    let mut count = 0usize;

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        tab: &mut Vec<Vec<usize>>,
        used: &mut Vec<i64>,
        content: &[i64],
        count: &mut usize,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=content.len() {
            if used[v - 1] >= content[v - 1] {
                continue;
            }
            if c > 0 && tab[r][c - 1] > v {
                continue;
            }
            if r > 0 && tab[r - 1][c] >= v {
                continue;
            }
            tab[r][c] = v;
            used[v - 1] += 1;
            rec(idx + 1, cells, tab, used, content, count);
            used[v - 1] -= 1;
            tab[r][c] = 0;
        }
    }
    rec(0, &cells, &mut tab, &mut used, content, &mut count);
    count
}

#[test]
fn oracle_self_checks() {
    // standard values
    assert_eq!(kostka(&[2, 1, 0], &[1, 1, 1]), 2);
    assert_eq!(kostka(&[2, 0, 0], &[1, 1, 0]), 1);
    assert_eq!(kostka(&[1, 1, 1], &[1, 1, 1]), 1);
    assert_eq!(kostka(&[1, 1, 0], &[2, 0, 0]), 0);
    assert_eq!(kostka(&[3, 1], &[2, 2]), 1);
    // tableau counts only depend on the sorted content
    for perm in [[1, 2, 0], [0, 1, 2], [0, 2, 1], [2, 0, 1]] {
        let perm: Vec<i64> = perm.to_vec();
        assert_eq!(kostka(&[2, 1, 0], &perm), kostka(&[2, 1, 0], &[2, 1, 0]));
    }
    assert_eq!(partitions_into(3, 3).len(), 3);
}
