use crate::error::{Error, Result};

/// An ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Lexicographic stream of the compositions of `n` into exactly `k`
/// positive parts.
pub struct Compositions {
    current: Option<Vec<u32>>,
    n: u32,
}

/// All `C(n-1, k-1)` compositions of `n` into `k` parts. Empty when
/// `k == 0` or `k > n`.
pub fn compositions(n: u32, k: u32) -> Compositions {
    let current = if k == 0 || k > n {
        None
    } else {
        let mut first = vec![1u32; k as usize];
        first[k as usize - 1] = n - (k - 1);
        Some(first)
    };
    Compositions { current, n }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.take()?;
        let out = Composition { parts: cur.clone() };
        // successor: bump the rightmost non-final position that can grow,
        // reset everything after it to 1 and put the remainder last
        let k = cur.len();
        let mut next = cur;
        let mut i = k.saturating_sub(1);
        while i > 0 {
            i -= 1;
            let prefix: u32 = next[..=i].iter().sum();
            let rest = (k - i - 1) as u32;
            if prefix + 1 + rest <= self.n {
                next[i] += 1;
                for p in next.iter_mut().skip(i + 1) {
                    *p = 1;
                }
                let used: u32 = next[..k - 1].iter().sum();
                next[k - 1] = self.n - used;
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// Number of weak compositions of `total` into `parts` nonnegative parts,
/// `C(total + parts - 1, parts - 1)`, saturating.
pub fn weak_composition_count(total: u32, parts: u32) -> u128 {
    if parts == 0 {
        return u128::from(total == 0);
    }
    let n = (total + parts - 1) as u128;
    let k = (parts - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Multiplicity vectors `(a_1, ..., a_n)` with `a_1 + 2 a_2 + ... + n a_n = n`.
pub fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(part: u32, remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if part == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for mult in 0..=remaining / part {
            acc[part as usize - 1] = mult;
            rec(part - 1, remaining - mult * part, acc, out);
        }
        acc[part as usize - 1] = 0;
    }
    let mut out = Vec::new();
    let mut acc = vec![0u32; n as usize];
    rec(n, n, &mut acc, &mut out);
    out
}

/// A partition of `{1, ..., n}` into nonempty disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    pub blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// `c(P) = prod (|block| - 1)!`.
    pub fn weight(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| (1..b.len() as u64).product::<u64>())
            .product()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub const MAX_SET_PARTITION_SIZE: u32 = 10;

/// All set partitions of `{1..n}`, in lexicographic order of their
/// restricted growth strings.
pub fn set_partitions(n: u32) -> Result<Vec<SetPartition>> {
    if n == 0 || n > MAX_SET_PARTITION_SIZE {
        return Err(Error::Unsupported(format!(
            "set partitions are enumerated for 1 <= n <= {MAX_SET_PARTITION_SIZE}, got {n}"
        )));
    }
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            let mut blocks = vec![Vec::new(); max + 1];
            for (elem, &b) in rgs.iter().enumerate() {
                blocks[b].push(elem as u32 + 1);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    let mut rgs = vec![0usize; n as usize];
    let mut out = Vec::new();
    rec(1, 0, &mut rgs, &mut out);
    Ok(out)
}
