use super::Partition;

/// Standardization of a word: the permutation (one-line, values 1..=n)
/// obtained by numbering letters in increasing order, equal letters left to
/// right.
pub fn standardize(word: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut perm = vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        perm[i] = rank + 1;
    }
    perm
}

/// Cycles of a one-line permutation (values 1..=n), as lists of 0-based
/// positions, each starting at its smallest position.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push(i);
            i = perm[i] - 1;
        }
        out.push(cyc);
    }
    out
}

/// Standardize `word`, replace each cycle by the sum of the letters at its
/// positions, drop the sums divisible by `r`, and sort what remains.
pub fn cycle_transform(word: &[usize], r: usize) -> Partition {
    let perm = standardize(word);
    let sums = cycles(&perm)
        .into_iter()
        .map(|c| c.iter().map(|&i| word[i]).sum::<usize>())
        .filter(|s| s % r != 0)
        .collect();
    Partition::from_parts(sums)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 3]), vec![1, 2]);
        assert_eq!(standardize(&[3, 1]), vec![2, 1]);
        assert_eq!(standardize(&[1, 2, 1]), vec![1, 3, 2]);
    }

    #[test]
    fn transform_examples() {
        assert_eq!(cycle_transform(&[1, 3], 2).parts(), &[3, 1]);
        assert!(cycle_transform(&[3, 1], 2).is_empty());
        assert_eq!(cycle_transform(&[1, 2, 1], 3).parts(), &[1]);
    }

    #[test]
    fn discarded_weight_is_multiple_of_r() {
        for w in [[1usize, 3, 1, 1], [3, 1, 1, 1], [1, 1, 3, 1]] {
            for r in 2..=5 {
                let nu = cycle_transform(&w, r);
                let total: usize = w.iter().sum();
                assert_eq!((total - nu.weight()) % r, 0);
            }
        }
    }
}
