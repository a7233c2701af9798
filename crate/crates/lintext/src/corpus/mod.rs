//! Corpus ingestion and tokenization.
//!
//! A corpus is a JSON Lines file, one labeled PubMed-style record per line.
//! Tokenization lowercases, splits on non-alphanumeric characters, masks
//! every maximal digit run as the single token `#`, drops textual tokens
//! shorter than 2 characters, and Porter-stems the title, abstract, journal,
//! RN and SI fields. Author tokens are prefixed `AU:` and left unstemmed;
//! each MeSH term is kept verbatim as one `MeSH:`-prefixed token. Non-ASCII
//! text is folded to ASCII where possible; what cannot be folded acts as a
//! token separator.

mod porter;

pub use porter::porter_stem;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::{BufRead, BufReader};
use std::path::Path;

/// Relevance label; `Relevant` is the positive class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Relevant,
    Irrelevant,
}

impl Label {
    /// +1 for the positive class, -1 for the negative.
    pub fn sign(self) -> f64 {
        match self {
            Label::Relevant => 1.0,
            Label::Irrelevant => -1.0,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Label::Relevant
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Relevant => write!(f, "Relevant"),
            Label::Irrelevant => write!(f, "Irrelevant"),
        }
    }
}

/// One labeled PubMed-style record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub label: Label,
    pub title: String,
    #[serde(default)]
    pub abstract_text: String,
    #[serde(default)]
    pub authors: Vec<String>,
    #[serde(default)]
    pub journal: String,
    #[serde(default)]
    pub mesh_terms: Vec<String>,
    #[serde(default)]
    pub rn_codes: Vec<String>,
    #[serde(default)]
    pub si_codes: Vec<String>,
}

/// Supported corpus file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    JsonLines,
}

/// Load a labeled corpus. Records are returned in file order; blank lines
/// are ignored. Errors name the offending line.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Vec<Document>> {
    let CorpusFormat::JsonLines = format;
    let file = std::fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let reader = BufReader::new(file);
    let mut docs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path.display().to_string(), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let doc: Document = serde_json::from_str(&line).map_err(|e| Error::CorpusFormat {
            line: line_no,
            message: e.to_string(),
        })?;
        if doc.id.is_empty() {
            return Err(Error::CorpusFormat {
                line: line_no,
                message: "empty document id".into(),
            });
        }
        if !seen.insert(doc.id.clone()) {
            return Err(Error::DuplicateId(doc.id));
        }
        docs.push(doc);
    }
    Ok(docs)
}

/// Class counts of a corpus as (relevant, irrelevant).
pub fn class_counts(docs: &[Document]) -> (usize, usize) {
    let pos = docs.iter().filter(|d| d.label.is_positive()).count();
    (pos, docs.len() - pos)
}

/// A tokenized document. `segments` groups tokens by source field so that
/// bigrams never span fields; MeSH terms are single verbatim tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedDocument {
    pub id: String,
    pub label: Label,
    pub segments: Vec<Vec<String>>,
    pub mesh_tokens: Vec<String>,
}

impl TokenizedDocument {
    /// All textual tokens in field order, without the MeSH tokens.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.segments.iter().flatten().map(|s| s.as_str())
    }
}

/// Number mask used for digit runs.
pub const NUMBER_TOKEN: &str = "#";

/// Lowercase, ASCII-fold, split and mask one piece of text.
/// Digit runs become `#`; alphabetic runs shorter than 2 characters are
/// dropped; the rest are stemmed when `stem` is set.
fn tokenize_text(text: &str, stem: bool) -> Vec<String> {
    let folded = deunicode::deunicode(text);
    let mut tokens = Vec::new();
    let bytes = folded.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            tokens.push(NUMBER_TOKEN.to_string());
        } else if b.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            if i - start >= 2 {
                let word = folded[start..i].to_ascii_lowercase();
                tokens.push(if stem { porter_stem(&word) } else { word });
            }
        } else {
            i += 1;
        }
    }
    tokens
}

/// Tokenize a document. Deterministic; empty fields yield empty segments.
pub fn tokenize(doc: &Document) -> TokenizedDocument {
    let mut segments = Vec::new();
    segments.push(tokenize_text(&doc.title, true));
    segments.push(tokenize_text(&doc.abstract_text, true));
    segments.push(tokenize_text(&doc.journal, true));
    for code in &doc.rn_codes {
        segments.push(tokenize_text(code, true));
    }
    for code in &doc.si_codes {
        segments.push(tokenize_text(code, true));
    }
    for author in &doc.authors {
        let toks = tokenize_text(author, false)
            .into_iter()
            .map(|t| format!("AU:{t}"))
            .collect();
        segments.push(toks);
    }
    let mesh_tokens = doc
        .mesh_terms
        .iter()
        .filter(|t| !t.trim().is_empty())
        .map(|t| format!("MeSH:{t}"))
        .collect();
    TokenizedDocument {
        id: doc.id.clone(),
        label: doc.label,
        segments,
        mesh_tokens,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn doc_with_text(text: &str) -> Document {
        Document {
            id: "d1".into(),
            label: Label::Relevant,
            title: String::new(),
            abstract_text: text.into(),
            authors: vec![],
            journal: String::new(),
            mesh_terms: vec![],
            rn_codes: vec![],
            si_codes: vec![],
        }
    }

    fn abstract_tokens(text: &str) -> Vec<String> {
        tokenize(&doc_with_text(text)).segments[1].clone()
    }

    #[test]
    fn masks_numbers_and_stems() {
        assert_eq!(abstract_tokens("5 mg daily"), vec!["#", "mg", "daili"]);
        assert_eq!(abstract_tokens("crossover studies"), vec!["crossov", "studi"]);
    }

    #[test]
    fn drops_short_tokens_keeps_hash() {
        assert_eq!(abstract_tokens("a 5 b cd"), vec!["#", "cd"]);
    }

    #[test]
    fn embedded_digit_runs_are_masked() {
        // cyp3a4: alpha run "cyp", digit "3" -> #, alpha "a" dropped, "4" -> #
        assert_eq!(abstract_tokens("CYP3A4"), vec!["cyp", "#", "#"]);
    }

    #[test]
    fn mesh_terms_kept_verbatim() {
        let mut doc = doc_with_text("");
        doc.mesh_terms = vec!["Drug Interactions".into()];
        let tok = tokenize(&doc);
        assert_eq!(tok.mesh_tokens, vec!["MeSH:Drug Interactions"]);
    }

    #[test]
    fn authors_prefixed_not_stemmed() {
        let mut doc = doc_with_text("");
        doc.authors = vec!["Daily JE".into()];
        let tok = tokenize(&doc);
        // "daily" would stem to "daili"; author tokens must not.
        assert!(tok.segments.iter().flatten().any(|t| t == "AU:daily"));
        assert!(!tok.segments.iter().flatten().any(|t| t == "AU:daili"));
    }

    #[test]
    fn unicode_folds_to_ascii() {
        let mut doc = doc_with_text("");
        doc.authors = vec!["Lourenço A".into()];
        let tok = tokenize(&doc);
        assert!(tok.segments.iter().flatten().any(|t| t == "AU:lourenco"));
    }

    #[test]
    fn no_digits_and_no_short_tokens() {
        let doc = doc_with_text("Warfarin 5mg b.i.d. x7 days reduced AUC0-24 by 37%");
        let tok = tokenize(&doc);
        for t in tok.tokens() {
            assert!(!t.chars().any(|c| c.is_ascii_digit()), "digit in {t:?}");
            assert!(t == NUMBER_TOKEN || t.len() >= 2, "short token {t:?}");
        }
    }

    #[test]
    fn stemmed_fields_are_porter_fixpoints() {
        let doc = doc_with_text("The pharmacokinetics of repeatedly administered inhibitors");
        let tok = tokenize(&doc);
        for t in tok.segments[1].iter() {
            if t != NUMBER_TOKEN {
                assert_eq!(&porter_stem(t), t);
            }
        }
    }

    #[test]
    fn tokenize_is_deterministic() {
        let mut doc = doc_with_text("Midazolam and ketoconazole 200 mg");
        doc.mesh_terms = vec!["Drug Interactions".into()];
        doc.authors = vec!["Smith J".into()];
        assert_eq!(tokenize(&doc), tokenize(&doc));
    }

    fn write_jsonl(lines: &[&str]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        for l in lines {
            writeln!(f, "{l}").unwrap();
        }
        f
    }

    #[test]
    fn load_corpus_roundtrip() {
        let f = write_jsonl(&[
            r#"{"id":"a","label":"Relevant","title":"T one"}"#,
            r#"{"id":"b","label":"Irrelevant","title":"T two","authors":["X Y"]}"#,
        ]);
        let docs = load_corpus(f.path(), CorpusFormat::JsonLines).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(class_counts(&docs), (1, 1));
        assert_eq!(docs[0].abstract_text, ""); // missing optional defaults
    }

    #[test]
    fn load_corpus_empty_file() {
        let f = write_jsonl(&[]);
        assert!(load_corpus(f.path(), CorpusFormat::JsonLines)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn load_corpus_missing_label_names_line_and_field() {
        let f = write_jsonl(&[
            r#"{"id":"a","label":"Relevant","title":"ok"}"#,
            r#"{"id":"b","title":"no label"}"#,
        ]);
        let err = load_corpus(f.path(), CorpusFormat::JsonLines).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("label"), "{msg}");
    }

    #[test]
    fn load_corpus_duplicate_id() {
        let f = write_jsonl(&[
            r#"{"id":"a","label":"Relevant","title":"x"}"#,
            r#"{"id":"a","label":"Irrelevant","title":"y"}"#,
        ]);
        assert!(matches!(
            load_corpus(f.path(), CorpusFormat::JsonLines),
            Err(Error::DuplicateId(id)) if id == "a"
        ));
    }

    #[test]
    fn class_counts_preserved_through_tokenization() {
        let docs: Vec<Document> = (0..10)
            .map(|i| {
                let mut d = doc_with_text("some text");
                d.id = format!("d{i}");
                d.label = if i % 3 == 0 {
                    Label::Relevant
                } else {
                    Label::Irrelevant
                };
                d
            })
            .collect();
        let toks: Vec<TokenizedDocument> = docs.iter().map(tokenize).collect();
        let pos = toks.iter().filter(|t| t.label.is_positive()).count();
        assert_eq!((pos, toks.len() - pos), class_counts(&docs));
    }
}
