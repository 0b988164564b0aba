#pragma once

#include <string>

#include "u5/structure.hpp"

namespace u5 {

/// Matrix text format: a "tournament <n>" header, then n rows of n
/// characters over {0,1,-} — row u, column v is '1' iff u beats v, '-' on
/// the diagonal. Line-feed endings, trailing newline, byte-stable.
std::string render_tournament(const Tournament& t);

/// Strict parser for the matrix format. Throws InputError on any defect
/// (bad header, bad character, wrong dimensions, broken antisymmetry).
Tournament parse_tournament(const std::string& text);

/// Key-value tree rendering of a certificate, versioned ("u5cert 1" header),
/// 2-space indentation, vertex lists in host labels. Self-contained: a
/// verifier needs only this document and the tournament file.
std::string render_certificate(const Certificate& cert);

/// Parses the document format back into a certificate. Structural defects
/// throw InputError; semantic validity is the verifier's business.
Certificate parse_certificate(const std::string& text);

/// DOT digraph with one arc per dominant pair and stable names v0..v{n-1}.
std::string render_dot(const Tournament& t);

} // namespace u5
