use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Identifier of a vertex, poset element or complex vertex.
///
/// Labels are whitespace-free tokens. They order "naturally" (`2 < 10`), with
/// a plain byte comparison as the final tie-break so the order stays total.
/// Derived objects (cliques, simplices, chains) are labelled by
/// [`Label::set`], which makes functor composites comparable for equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(s: impl AsRef<str>) -> Self {
        Label(Arc::from(s.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Canonical label of a finite set of labels: `{a,b,c}` in label order.
    pub fn set<'a>(members: impl IntoIterator<Item = &'a Label>) -> Self {
        let mut v: Vec<&Label> = members.into_iter().collect();
        v.sort();
        v.dedup();
        let mut s = String::from("{");
        for (i, l) in v.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(l.as_str());
        }
        s.push('}');
        Label::new(s)
    }

    /// Whether the label can appear as a token in the text formats.
    pub fn is_valid_token(s: &str) -> bool {
        !s.is_empty() && !s.starts_with('#') && !s.chars().any(char::is_whitespace)
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        natord::compare(&self.0, &other.0).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::new(s)
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(Arc::from(s))
    }
}

impl AsRef<str> for Label {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl std::ops::Deref for Label {
    type Target = str;
    fn deref(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for Label {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Label::from(String::deserialize(d)?))
    }
}
