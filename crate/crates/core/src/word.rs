use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::Result;
use crate::letter::Letter;

/// A finite sequence of letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Counts of each absolute value, indexed from 1; trailing zeros trimmed.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().map(|l| l.value().unsigned_abs() as usize).max().unwrap_or(0);
        let mut out = vec![0; max];
        for l in &self.0 {
            out[l.value().unsigned_abs() as usize - 1] += 1;
        }
        out
    }

    /// Relabels by `1..=n` in letter order. Copies of `k'` are numbered in
    /// word order, copies of `k` in reverse word order, matching the
    /// standardization of a tableau read row by row from the top.
    pub fn standardize(&self) -> Word {
        let mut order: Vec<usize> = (0..self.0.len()).collect();
        order.sort_by_key(|&i| {
            let l = self.0[i];
            let pos = if l.is_primed() { i as isize } else { -(i as isize) };
            (l, pos)
        });
        let mut out = vec![Letter::plain(1); self.0.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = Letter::plain(rank as i32 + 1);
        }
        Word(out)
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Whitespace-separated letters, e.g. `1 1' 2'`.
impl FromStr for Word {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Word> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(Word)
    }
}
