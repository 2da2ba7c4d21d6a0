//! Fixed-width bit rows used for adjacency queries and set intersections.

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i / WORD] >> (i % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / WORD] |= 1 << (i % WORD);
}

/// Smallest set index `>= from` in `row`, if any.
pub(crate) fn next_set(row: &[u64], from: usize) -> Option<usize> {
    let mut w = from / WORD;
    if w >= row.len() {
        return None;
    }
    let mut word = row[w] & (!0u64 << (from % WORD));
    loop {
        if word != 0 {
            return Some(w * WORD + word.trailing_zeros() as usize);
        }
        w += 1;
        if w == row.len() {
            return None;
        }
        word = row[w];
    }
}

/// Square boolean matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let stride = words_for(n);
        BitMatrix {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    #[inline]
    pub(crate) fn get(&self, r: usize, c: usize) -> bool {
        test(self.row(r), c)
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize) {
        let s = self.stride;
        set(&mut self.bits[r * s..(r + 1) * s], c);
    }

    #[inline]
    pub(crate) fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.stride..(r + 1) * self.stride]
    }

    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    pub(crate) fn len(&self) -> usize {
        self.n
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.n {
            let line: String = (0..self.n)
                .map(|c| if self.get(r, c) { '1' } else { '.' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_set_crosses_words() {
        let mut row = vec![0u64; 3];
        set(&mut row, 5);
        set(&mut row, 130);
        assert_eq!(next_set(&row, 0), Some(5));
        assert_eq!(next_set(&row, 5), Some(5));
        assert_eq!(next_set(&row, 6), Some(130));
        assert_eq!(next_set(&row, 131), None);
        assert_eq!(next_set(&row, 500), None);
    }

    #[test]
    fn matrix_roundtrip() {
        let mut m = BitMatrix::new(70);
        m.set(3, 69);
        assert!(m.get(3, 69));
        assert!(!m.get(69, 3));
        assert_eq!(m.stride(), 2);
    }
}
