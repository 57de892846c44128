//! Words over a q-ary alphabet and verified codebooks, with the plain-text
//! codebook file format.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CodeParams;

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A fixed-length word, one symbol per position, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    /// The `index`-th word of length `n` in lexicographic order over `q` symbols.
    pub fn from_index(mut index: u64, n: usize, q: u64) -> Word {
        let mut digits = vec![0u8; n];
        for slot in digits.iter_mut().rev() {
            *slot = (index % q) as u8;
            index /= q;
        }
        Word(digits)
    }

    pub fn to_index(&self, q: u64) -> u64 {
        self.0.iter().fold(0u64, |acc, &s| acc * q + s as u64)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().filter(|&&s| s != 0).count() as u64
    }

    pub fn distance(&self, other: &Word) -> u64 {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count() as u64
    }

    /// Binary words of length ≤ 64 packed into a machine word, first symbol in
    /// the highest bit.
    pub fn pack_binary(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &s| (acc << 1) | s as u64)
    }

    pub fn parse(s: &str) -> Result<Word> {
        s.bytes()
            .map(|b| {
                DIGITS
                    .iter()
                    .position(|&d| d == b.to_ascii_lowercase())
                    .map(|p| p as u8)
                    .ok_or_else(|| Error::Codebook(format!("bad symbol {:?} in word {s:?}", b as char)))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", DIGITS[s as usize] as char)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact minimum pairwise distance, checking length, alphabet, weight and
/// distinctness. Fewer than two words gives the sentinel `n + 1`.
pub fn min_distance(words: &[Word], n: u64, q: u64, weight: Option<u64>) -> Result<u64> {
    let mut seen = HashSet::with_capacity(words.len());
    for word in words {
        if word.len() as u64 != n {
            return Err(Error::Codebook(format!("word {word} has length {} not {n}", word.len())));
        }
        if word.0.iter().any(|&s| s as u64 >= q) {
            return Err(Error::Codebook(format!("word {word} leaves the alphabet of size {q}")));
        }
        if let Some(w) = weight {
            if word.weight() != w {
                return Err(Error::Codebook(format!("word {word} does not have weight {w}")));
            }
        }
        if !seen.insert(word) {
            return Err(Error::Codebook(format!("duplicate word {word}")));
        }
    }
    let sentinel = n + 1;
    if q == 2 && n <= 64 {
        let packed: Vec<u64> = words.iter().map(Word::pack_binary).collect();
        Ok((0..packed.len())
            .into_par_iter()
            .map(|i| {
                packed[i + 1..]
                    .iter()
                    .map(|&b| (packed[i] ^ b).count_ones() as u64)
                    .min()
                    .unwrap_or(sentinel)
            })
            .min()
            .unwrap_or(sentinel))
    } else {
        Ok((0..words.len())
            .into_par_iter()
            .map(|i| {
                words[i + 1..]
                    .iter()
                    .map(|b| words[i].distance(b))
                    .min()
                    .unwrap_or(sentinel)
            })
            .min()
            .unwrap_or(sentinel))
    }
}

/// A set of codewords whose minimum distance has been verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codebook {
    pub params: CodeParams,
    pub words: Vec<Word>,
    /// Verified minimum Hamming distance; `n + 1` for fewer than two words.
    pub min_distance: u64,
    /// Seed of the randomized procedure that produced the words, if any.
    pub seed: Option<u64>,
}

/// Hamming distance the words must keep: `d`, or `2d` for constant weight.
pub fn required_distance(params: &CodeParams) -> u64 {
    match params.w() {
        Some(_) => 2 * params.d(),
        None => params.d(),
    }
}

impl Codebook {
    /// Verifies `words` against `params`; fails when the minimum distance
    /// falls short of what `params` requires.
    pub fn new(params: CodeParams, words: Vec<Word>) -> Result<Codebook> {
        let min_distance = min_distance(&words, params.n(), params.q(), params.w())?;
        if min_distance < required_distance(&params) {
            return Err(Error::Codebook(format!(
                "minimum distance {min_distance} below required {}",
                required_distance(&params)
            )));
        }
        Ok(Codebook {
            params,
            words,
            min_distance,
            seed: None,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn header(&self) -> String {
        let p = &self.params;
        let w = p.w().map(|w| format!(" w={w}")).unwrap_or_default();
        format!(
            "# n={} d={} q={}{} size={} mindist={}",
            p.n(),
            p.d(),
            p.q(),
            w,
            self.words.len(),
            self.min_distance
        )
    }

    /// Header line, an optional `# seed=` line, then one word per line.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{}", self.header())?;
        if let Some(seed) = self.seed {
            writeln!(out, "# seed={seed}")?;
        }
        for word in &self.words {
            writeln!(out, "{word}")?;
        }
        Ok(())
    }
}

/// Header fields and words of a codebook file, before any verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodebookFile {
    pub n: u64,
    pub d: u64,
    pub q: u64,
    pub w: Option<u64>,
    pub declared_size: Option<u64>,
    pub declared_mindist: Option<u64>,
    pub words: Vec<Word>,
}

impl CodebookFile {
    pub fn params(&self) -> Result<CodeParams> {
        CodeParams::new(self.n, self.d, self.q, self.w)
    }
}

pub fn read_codebook<R: BufRead>(input: R) -> Result<CodebookFile> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Codebook("empty file".into()))??;
    let fields = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Codebook("missing '# n=...' header".into()))?;
    let mut file = CodebookFile {
        n: 0,
        d: 0,
        q: 2,
        w: None,
        declared_size: None,
        declared_mindist: None,
        words: Vec::new(),
    };
    let mut have = (false, false);
    for field in fields.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Codebook(format!("bad header field {field:?}")))?;
        let value: u64 = value
            .parse()
            .map_err(|_| Error::Codebook(format!("bad header value {field:?}")))?;
        match key {
            "n" => {
                file.n = value;
                have.0 = true;
            }
            "d" => {
                file.d = value;
                have.1 = true;
            }
            "q" => file.q = value,
            "w" => file.w = Some(value),
            "size" => file.declared_size = Some(value),
            "mindist" => file.declared_mindist = Some(value),
            _ => return Err(Error::Codebook(format!("unknown header field {key:?}"))),
        }
    }
    if !(have.0 && have.1) {
        return Err(Error::Codebook("header needs n= and d=".into()));
    }
    for line in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        file.words.push(Word::parse(line)?);
    }
    Ok(file)
}
