//! Three-valued answers for horizon-limited decoders.

/// Result of a decoder that may be unable to certify an answer from the
/// finite truncation it was given. `Inconclusive` is not an error: it means
/// the horizon was too small to rule out the alternatives, and a larger
/// truncation may decide the question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Decided(T),
    Inconclusive(String),
}

impl<T> Outcome<T> {
    pub fn inconclusive(reason: impl Into<String>) -> Self {
        Outcome::Inconclusive(reason.into())
    }

    pub fn is_decided(&self) -> bool {
        matches!(self, Outcome::Decided(_))
    }

    pub fn decided(self) -> Option<T> {
        match self {
            Outcome::Decided(v) => Some(v),
            Outcome::Inconclusive(_) => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Decided(v) => Outcome::Decided(f(v)),
            Outcome::Inconclusive(r) => Outcome::Inconclusive(r),
        }
    }

    /// Test helper: unwrap a decided value, panicking with the reason otherwise.
    pub fn expect_decided(self, context: &str) -> T {
        match self {
            Outcome::Decided(v) => v,
            Outcome::Inconclusive(r) => panic!("{context}: inconclusive ({r})"),
        }
    }
}
