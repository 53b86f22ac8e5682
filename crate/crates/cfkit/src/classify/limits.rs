//! Subsequence limit estimation.
