//! Structured labels for objects, morphisms, order elements, and simplices.
//!
//! Labels keep source coordinates like `(i,j)` or `3_0` intact, so every
//! report and error message can cite them directly.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A structured label: integers, names, tuples, and subscripted pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(i64),
    Name(String),
    Tuple(Vec<Label>),
    /// Subscripted label, rendered `base_sub` (e.g. `3_0`).
    Sub(Box<Label>, Box<Label>),
}

impl Label {
    pub fn int(n: i64) -> Self {
        Label::Int(n)
    }

    pub fn name(s: impl Into<String>) -> Self {
        Label::Name(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Tuple(vec![a, b])
    }

    pub fn ipair(a: i64, b: i64) -> Self {
        Label::Tuple(vec![Label::Int(a), Label::Int(b)])
    }

    pub fn tuple(items: Vec<Label>) -> Self {
        Label::Tuple(items)
    }

    pub fn subscript(base: Label, sub: Label) -> Self {
        Label::Sub(Box::new(base), Box::new(sub))
    }

    /// Subscripted integer pair, e.g. `isub(3, 0)` renders as `3_0`.
    pub fn isub(base: i64, sub: i64) -> Self {
        Label::subscript(Label::Int(base), Label::Int(sub))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Label::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Label]> {
        match self {
            Label::Tuple(items) => Some(items),
            _ => None,
        }
    }

    /// Integer components of a tuple label, if every entry is an integer.
    pub fn as_int_tuple(&self) -> Option<Vec<i64>> {
        self.as_tuple()?.iter().map(Label::as_int).collect()
    }

    /// Parse a label from its display form: `3`, `a`, `(0,1)`, `3_0`, `((0,0),(1,1))`.
    pub fn parse(text: &str) -> Result<Label, String> {
        let mut parser = LabelParser {
            chars: text.trim(),
            pos: 0,
        };
        let label = parser.parse_label()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(format!("trailing input in label at byte {}", parser.pos));
        }
        Ok(label)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{}", n),
            Label::Name(s) => write!(f, "{}", s),
            Label::Tuple(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", item)?;
                }
                write!(f, ")")
            }
            Label::Sub(base, sub) => write!(f, "{}_{}", base, sub),
        }
    }
}

struct LabelParser<'a> {
    chars: &'a str,
    pos: usize,
}

impl<'a> LabelParser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars[self.pos..].chars().next()
    }

    fn parse_label(&mut self) -> Result<Label, String> {
        let base = self.parse_atom()?;
        if self.peek() == Some('_') {
            self.pos += 1;
            let sub = self.parse_atom()?;
            return Ok(Label::subscript(base, sub));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Label, String> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    items.push(self.parse_label()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err("expected ',' or ')' in tuple label".into()),
                    }
                }
                Ok(Label::Tuple(items))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let start = self.pos;
                if c == '-' {
                    self.pos += 1;
                }
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.pos += 1;
                }
                self.chars[start..self.pos]
                    .parse::<i64>()
                    .map(Label::Int)
                    .map_err(|e| e.to_string())
            }
            Some(c) if c.is_alphanumeric() || c == '*' => {
                let start = self.pos;
                while let Some(d) = self.peek() {
                    if d.is_alphanumeric() || d == '*' {
                        self.pos += d.len_utf8();
                    } else {
                        break;
                    }
                }
                Ok(Label::Name(self.chars[start..self.pos].to_string()))
            }
            _ => Err("empty or malformed label".into()),
        }
    }
}

// Labels serialize as plain JSON values: numbers, strings, arrays for tuples,
// and {"sub":[base,sub]} for subscripted labels.
impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Int(n) => serializer.serialize_i64(*n),
            Label::Name(s) => serializer.serialize_str(s),
            Label::Tuple(items) => {
                let mut seq = serializer.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            Label::Sub(base, sub) => {
                use serde::ser::SerializeMap;
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("sub", &[base.as_ref(), sub.as_ref()])?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LabelVisitor;

        impl<'de> Visitor<'de> for LabelVisitor {
            type Value = Label;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer, string, array, or {\"sub\": [a, b]}")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Label, E> {
                Ok(Label::Int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Label, E> {
                i64::try_from(v)
                    .map(Label::Int)
                    .map_err(|_| E::custom("integer label out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Label, E> {
                Ok(Label::Name(v.to_string()))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Label, A::Error> {
                let mut items = Vec::new();
                while let Some(item) = seq.next_element()? {
                    items.push(item);
                }
                Ok(Label::Tuple(items))
            }

            fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<Label, A::Error> {
                let key: String = map
                    .next_key()?
                    .ok_or_else(|| de::Error::custom("expected {\"sub\": [a, b]}"))?;
                if key != "sub" {
                    return Err(de::Error::custom("expected key \"sub\""));
                }
                let pair: Vec<Label> = map.next_value()?;
                if pair.len() != 2 {
                    return Err(de::Error::custom("\"sub\" expects exactly two labels"));
                }
                let mut it = pair.into_iter();
                Ok(Label::subscript(it.next().unwrap(), it.next().unwrap()))
            }
        }

        deserializer.deserialize_any(LabelVisitor)
    }
}
