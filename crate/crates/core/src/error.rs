use std::fmt;

/// A violated operation precondition. The message quotes the contract that
/// failed, so callers (and the CLI) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precondition(pub String);

impl Precondition {
    pub fn new(msg: impl Into<String>) -> Self {
        Precondition(msg.into())
    }
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "precondition violated: {}", self.0)
    }
}

impl std::error::Error for Precondition {}

pub type Result<T> = std::result::Result<T, Precondition>;

/// Shorthand used throughout: `ensure!(cond, "p prime")?`.
macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !($cond) {
            return Err($crate::error::Precondition::new(format!($($msg)*)));
        }
    };
}
pub(crate) use ensure;
