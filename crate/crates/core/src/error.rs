use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("bad token {token:?}: {reason}")]
    BadToken { token: String, reason: &'static str },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("expected a braid on {expected} strands, got {found}")]
    WrongStrandCount { expected: usize, found: usize },
    #[error("cannot place {strands} strands at offset {offset} inside {target} strands")]
    OffsetOutOfRange {
        offset: usize,
        strands: usize,
        target: usize,
    },
    #[error("block crossing at {start} with widths {left}+{right} does not fit in {strands} strands")]
    BlockOutOfRange {
        start: usize,
        left: usize,
        right: usize,
        strands: usize,
    },
    #[error("{widths} cable widths given for a braid on {strands} strands")]
    WidthMismatch { strands: usize, widths: usize },
    #[error("cable widths must be positive")]
    ZeroWidth,
    #[error("underlying permutation is {found}, expected (2 3)")]
    NotACandidate { found: String },
    #[error("scan length {max_len} exceeds the supported maximum {limit}")]
    ScanTooLong { max_len: usize, limit: usize },
}
