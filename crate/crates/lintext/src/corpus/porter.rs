//! Porter stemmer (M.F. Porter, 1980), all five steps.
//!
//! Operates on lowercase ASCII-alphabetic words; words of length <= 2 are
//! returned unchanged. This is the original published rule set, without the
//! later "departure" revisions.

/// Stem a lowercase ASCII-alphabetic word.
pub fn porter_stem(word: &str) -> String {
    debug_assert!(word.bytes().all(|b| b.is_ascii_lowercase()));
    if word.len() <= 2 {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
        stem: 0,
    };
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b).unwrap()
}

struct Stemmer {
    b: Vec<u8>,
    /// Length of the stem left of the most recently matched suffix.
    stem: usize,
}

impl Stemmer {
    fn last(&self) -> usize {
        self.b.len() - 1
    }

    fn is_consonant(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// The `m` of [C](VC)^m[V], computed over b[0..upto].
    fn measure_of(&self, upto: usize) -> usize {
        let mut n = 0;
        let mut i = 0;
        while i < upto && self.is_consonant(i) {
            i += 1;
        }
        loop {
            while i < upto && !self.is_consonant(i) {
                i += 1;
            }
            if i == upto {
                return n;
            }
            n += 1;
            while i < upto && self.is_consonant(i) {
                i += 1;
            }
            if i == upto {
                return n;
            }
        }
    }

    /// Measure of the stem left of the matched suffix.
    fn measure(&self) -> usize {
        self.measure_of(self.stem)
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.stem).any(|i| !self.is_consonant(i))
    }

    /// b[i-1] == b[i] and both are consonants.
    fn double_consonant(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.is_consonant(i)
    }

    /// b[i-2..=i] is consonant-vowel-consonant with the final consonant not
    /// w, x, or y. Detects stems like "hop" that take back a final e.
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.is_consonant(i) || self.is_consonant(i - 1) || !self.is_consonant(i - 2) {
            return false;
        }
        !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    /// If the word ends with `suffix`, record the stem length and return true.
    fn ends(&mut self, suffix: &[u8]) -> bool {
        let len = suffix.len();
        if len > self.b.len() || &self.b[self.b.len() - len..] != suffix {
            return false;
        }
        self.stem = self.b.len() - len;
        true
    }

    /// Replace the matched suffix with `s`.
    fn set_to(&mut self, s: &[u8]) {
        self.b.truncate(self.stem);
        self.b.extend_from_slice(s);
    }

    /// set_to, but only when the stem has positive measure.
    fn replace_if_m(&mut self, s: &[u8]) {
        if self.measure() > 0 {
            self.set_to(s);
        }
    }

    fn step1ab(&mut self) {
        if self.b[self.last()] == b's' {
            if self.ends(b"sses") {
                self.b.truncate(self.b.len() - 2);
            } else if self.ends(b"ies") {
                self.set_to(b"i");
            } else if self.b[self.last() - 1] != b's' {
                self.b.pop();
            }
        }
        if self.ends(b"eed") {
            if self.measure() > 0 {
                self.b.pop();
            }
        } else if (self.ends(b"ed") || self.ends(b"ing")) && self.vowel_in_stem() {
            self.b.truncate(self.stem);
            if self.ends(b"at") {
                self.set_to(b"ate");
            } else if self.ends(b"bl") {
                self.set_to(b"ble");
            } else if self.ends(b"iz") {
                self.set_to(b"ize");
            } else if self.double_consonant(self.last()) {
                if !matches!(self.b[self.last()], b'l' | b's' | b'z') {
                    self.b.pop();
                }
            } else if self.measure_of(self.b.len()) == 1 && self.cvc(self.last()) {
                self.stem = self.b.len();
                self.set_to(b"e");
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends(b"y") && self.vowel_in_stem() {
            let i = self.last();
            self.b[i] = b'i';
        }
    }

    fn step2(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        let rules: &[(&[u8], &[u8])] = match self.b[self.last() - 1] {
            b'a' => &[(b"ational", b"ate"), (b"tional", b"tion")],
            b'c' => &[(b"enci", b"ence"), (b"anci", b"ance")],
            b'e' => &[(b"izer", b"ize")],
            b'l' => &[
                (b"abli", b"able"),
                (b"alli", b"al"),
                (b"entli", b"ent"),
                (b"eli", b"e"),
                (b"ousli", b"ous"),
            ],
            b'o' => &[(b"ization", b"ize"), (b"ation", b"ate"), (b"ator", b"ate")],
            b's' => &[
                (b"alism", b"al"),
                (b"iveness", b"ive"),
                (b"fulness", b"ful"),
                (b"ousness", b"ous"),
            ],
            b't' => &[(b"aliti", b"al"), (b"iviti", b"ive"), (b"biliti", b"ble")],
            _ => return,
        };
        for &(suffix, replacement) in rules {
            if self.ends(suffix) {
                self.replace_if_m(replacement);
                return;
            }
        }
    }

    fn step3(&mut self) {
        let rules: &[(&[u8], &[u8])] = match self.b[self.last()] {
            b'e' => &[(b"icate", b"ic"), (b"ative", b""), (b"alize", b"al")],
            b'i' => &[(b"iciti", b"ic")],
            b'l' => &[(b"ical", b"ic"), (b"ful", b"")],
            b's' => &[(b"ness", b"")],
            _ => return,
        };
        for &(suffix, replacement) in rules {
            if self.ends(suffix) {
                self.replace_if_m(replacement);
                return;
            }
        }
    }

    fn step4(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        let matched = match self.b[self.last() - 1] {
            b'a' => self.ends(b"al"),
            b'c' => self.ends(b"ance") || self.ends(b"ence"),
            b'e' => self.ends(b"er"),
            b'i' => self.ends(b"ic"),
            b'l' => self.ends(b"able") || self.ends(b"ible"),
            b'n' => {
                self.ends(b"ant")
                    || self.ends(b"ement")
                    || self.ends(b"ment")
                    || self.ends(b"ent")
            }
            b'o' => {
                (self.ends(b"ion")
                    && self.stem >= 1
                    && matches!(self.b[self.stem - 1], b's' | b't'))
                    || self.ends(b"ou")
            }
            b's' => self.ends(b"ism"),
            b't' => self.ends(b"ate") || self.ends(b"iti"),
            b'u' => self.ends(b"ous"),
            b'v' => self.ends(b"ive"),
            b'z' => self.ends(b"ize"),
            _ => false,
        };
        if matched && self.measure() > 1 {
            self.b.truncate(self.stem);
        }
    }

    fn step5(&mut self) {
        // 5a: drop a final e when m > 1, or when m == 1 and the stem does
        // not end consonant-vowel-consonant.
        if self.b[self.last()] == b'e' {
            let a = self.measure_of(self.b.len());
            if a > 1 || (a == 1 && !self.cvc(self.last() - 1)) {
                self.b.pop();
            }
        }
        // 5b: undouble a final ll when m > 1.
        if self.b[self.last()] == b'l'
            && self.double_consonant(self.last())
            && self.measure_of(self.b.len()) > 1
        {
            self.b.pop();
        }
    }
}
