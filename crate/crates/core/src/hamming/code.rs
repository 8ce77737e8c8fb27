use std::fmt;

use crate::error::{HntError, Result};
use crate::hamming::{GraphParams, Vertex};

/// A nonempty set of vertices of `H(m,q)`.
///
/// Words are stored as sorted radix indices, so iteration order is the
/// canonical vertex order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    params: GraphParams,
    words: Vec<u64>,
}

impl Code {
    /// Builds a code from explicit vertices; duplicates are an error.
    pub fn new(params: GraphParams, words: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut indices = Vec::new();
        for w in words {
            params.ensure_same(w.params())?;
            indices.push(w.index());
        }
        Self::from_indices(params, indices)
    }

    /// Builds a code from radix indices; duplicates are an error.
    pub fn from_indices(params: GraphParams, mut indices: Vec<u64>) -> Result<Self> {
        if indices.is_empty() {
            return Err(HntError::EmptyCode);
        }
        let count = params.vertex_count();
        if let Some(&bad) = indices.iter().find(|&&i| i >= count) {
            return Err(HntError::param(format!(
                "vertex index {bad} out of range for {params}"
            )));
        }
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(HntError::DuplicateWord(
                Vertex::from_index_unchecked(params, w[0]).to_string(),
            ));
        }
        Ok(Code {
            params,
            words: indices,
        })
    }

    /// Set-image constructor: duplicates collapse silently.
    pub(crate) fn collect_indices(params: GraphParams, mut indices: Vec<u64>) -> Result<Self> {
        if indices.is_empty() {
            return Err(HntError::EmptyCode);
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(Code {
            params,
            words: indices,
        })
    }

    /// Caller guarantees `indices` is sorted, unique, nonempty and in range.
    pub(crate) fn from_sorted_unchecked(params: GraphParams, indices: Vec<u64>) -> Self {
        debug_assert!(!indices.is_empty());
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Code {
            params,
            words: indices,
        }
    }

    /// The complete code: every vertex of the graph.
    pub fn complete(params: GraphParams, budget: u64) -> Result<Self> {
        params.ensure_vertex_budget(budget)?;
        Ok(Code {
            params,
            words: (0..params.vertex_count()).collect(),
        })
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false; codes are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_complete(&self) -> bool {
        self.words.len() as u64 == self.params.vertex_count()
    }

    /// Sorted radix indices of the codewords.
    pub fn indices(&self) -> &[u64] {
        &self.words
    }

    pub fn words(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words
            .iter()
            .map(move |&i| Vertex::from_index_unchecked(self.params, i))
    }

    pub fn first(&self) -> Vertex {
        Vertex::from_index_unchecked(self.params, self.words[0])
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.params() == self.params && self.contains_index(v.index())
    }

    pub fn contains_index(&self, index: u64) -> bool {
        self.words.binary_search(&index).is_ok()
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code[{}]", self.params)?;
        f.debug_set().entries(self.words()).finish()
    }
}
