//! Size caps, overridable through environment variables.

fn env_usize(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

/// Maximum number of edges for a full orientation scan.
pub fn max_enum_edges() -> usize {
    env_usize("ODIST_MAX_ENUM_EDGES", 24)
}

/// Maximum number of vertices a graph may have.
pub fn max_vertices() -> usize {
    env_usize("ODIST_MAX_VERTICES", 64)
}

/// Maximum number of vertices for generic automorphism backtracking.
pub fn aut_cap() -> usize {
    env_usize("ODIST_AUT_CAP", 16)
}

/// Maximum word length for materializing the canonical biclique orientation.
pub fn canonical_cap() -> usize {
    env_usize("ODIST_CANONICAL_CAP", 5)
}
