#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "u5/core.hpp"
#include "u5/decomposition.hpp"
#include "u5/detection.hpp"
#include "u5/generators.hpp"

namespace u5 {

/// Partition of a vertex set into three parts X, Y, Z, each carried as its
/// transitive order, such that X∪Y, Y∪Z and Z∪X are all transitive. Parts
/// may be empty (degenerate partitions of transitive tournaments).
struct TrianglePartition {
    TransitiveOrder x, y, z;

    VertexSet members(int universe) const;
    int total() const { return x.size() + y.size() + z.size(); }
};

/// Full check of the partition invariants against t (covering all of V).
bool verify_triangle_partition(const Tournament& t, const TrianglePartition& p);

/// Same check against an arbitrary sub-universe of `host`.
bool verify_triangle_partition_on(const Tournament& host, const TrianglePartition& p,
                                  const VertexSet& universe_members);

/// Identification of t as a critical tournament: the family kind (T, U or W),
/// the odd order n = t.size(), and the explicit vertex image
/// (family vertex i plays host vertex image[i]). At n <= 3 the three families
/// coincide and the answer is reported as kind T.
struct CriticalMatch {
    Family kind;
    int n;
    std::vector<int> image;
};

std::optional<CriticalMatch> identify_critical(const Tournament& t);

/// Chain of cyclic triangles C_1..C_{n-2} through a 3-partitioned strongly
/// connected tournament: C_1 takes the first vertex of each part and each
/// successive triangle advances exactly one part position.
struct TriangleSequence {
    struct Triple {
        int xi, yj, zk; // 0-based positions into the three part orders
    };
    std::vector<Triple> triangles;
};

/// Constructive chain builder; advances the first of (x, y, z) whose
/// increment stays cyclic. Requires t strongly connected with at least three
/// vertices and p a valid all-nonempty partition of V(t).
TriangleSequence triangle_sequence(const Tournament& t, const TrianglePartition& p);

/// One breach of the five forbidden-configuration rules relating cyclic
/// triangles to the successor/predecessor split around a vertex.
struct Lemma4Violation {
    char rule;                 // 'a' through 'e'
    std::vector<int> triangle; // the triangle C
    int witness;               // u for rules a/b, x' for rules c/d/e
    std::string detail;
};

/// Scans every cyclic triangle of t - {v} (and every pair of triangles
/// sharing two vertices) against the five rules; the list is empty whenever
/// t avoids both five-vertex obstructions.
std::vector<Lemma4Violation> lemma4_scan(const Tournament& t, int v);

/// Where u slots into a transitive part: predecessors are the first
/// position-1 entries of the order, successors the rest. Absent when no
/// clean split exists.
struct InsertionProfile {
    int position; // 1-based, in 1..|part|+1
};

std::optional<InsertionProfile> insertion_profile(const Tournament& t, int u,
                                                  const TransitiveOrder& part);

struct MergeCheck {
    bool transitive;
    std::optional<std::pair<int, int>> witness; // offending pair when not
};

/// Decides whether the union of two transitive sets is transitive purely by
/// monotonicity of the insertion positions of the first part's elements
/// against the second part.
MergeCheck merge_positions(const Tournament& t, const TransitiveOrder& first,
                           const TransitiveOrder& second);

/// Raised by find_prime_chain when a critical stage is reached; the caller
/// should handle the stage via identify_critical instead.
struct CriticalStageError : ContractViolation {
    CriticalStageError(CriticalMatch m, VertexSet s)
        : ContractViolation("prime chain reached a critical stage of order " + std::to_string(m.n)),
          match(std::move(m)), stage(std::move(s)) {}
    CriticalMatch match;
    VertexSet stage;
};

/// Descending chain V = S_k ⊃ S_{k-1} ⊃ ... of vertex sets, each inducing a
/// prime subtournament, each one vertex smaller, down to five vertices (or
/// all of t when t has at most five). Deletion candidates are scanned in
/// ascending vertex order; the first prime deletion wins.
std::vector<VertexSet> find_prime_chain(const Tournament& t);

/// One induction step: g is prime (and assumed free of both five-vertex
/// obstructions), p is a valid partition of g - {v}; returns a verified
/// partition of g with v inserted into one part. Throws ClaimViolation when
/// any of the theorem-backed consistency checks fails — which, given the
/// preconditions, cannot happen on obstruction-free inputs.
TrianglePartition extend_partition(const Tournament& g, const TrianglePartition& p, int v);

/// Triangle partition of a prime tournament when it avoids both five-vertex
/// obstructions, absent when it contains one. Built from the small bases
/// (n <= 2, the cyclic triangle, W_n) by repeated extension along a prime
/// chain.
std::optional<TrianglePartition> find_triangle_partition_prime(const Tournament& t);

// --- certificates -----------------------------------------------------------

class Certificate;

/// Host contains U5: the witness embedding (host labels).
struct ForbiddenCopyCert {
    Embedding embedding;
};

/// Host is exactly T_n: the explicit isomorphism (family vertex i plays
/// host vertex image[i]). Only kind T appears in freeness certificates.
struct CriticalCert {
    int n = 0;
    std::vector<int> image;
};

/// A verified triangle partition of the host.
struct PartitionCert {
    TrianglePartition partition;
};

/// Mirrors one substitution-decomposition node: an ordered block partition
/// (node-local labels), a certificate for the contracted quotient, and one
/// certificate per block against induced(host, block).
struct CompositeCert {
    bool linear = false;
    std::vector<VertexSet> blocks;
    std::unique_ptr<Certificate> quotient_cert;
    std::vector<Certificate> block_certs;
};

/// Tagged union over the four certificate forms. Every certificate carries
/// enough data to be re-verified against its host in one pass, without
/// re-running any recognition search.
class Certificate {
public:
    using Node = std::variant<ForbiddenCopyCert, CriticalCert, PartitionCert, CompositeCert>;

    Certificate() = default;
    explicit Certificate(Node n) : node(std::move(n)) {}

    Node node;

    bool certifies_free() const { return !std::holds_alternative<ForbiddenCopyCert>(node); }

    const ForbiddenCopyCert* as_forbidden() const { return std::get_if<ForbiddenCopyCert>(&node); }
    const CriticalCert* as_critical() const { return std::get_if<CriticalCert>(&node); }
    const PartitionCert* as_partition() const { return std::get_if<PartitionCert>(&node); }
    const CompositeCert* as_composite() const { return std::get_if<CompositeCert>(&node); }
};

/// Total recognizer: decomposes t, certifies each prime quotient by the
/// cheapest applicable route (critical T_n, then triangle partition, then
/// locating a forbidden copy) and assembles the result. The verdict is the
/// certificate's kind; it always re-validates against t.
Certificate certify_u5_status(const Tournament& t);

struct CertCheck {
    bool valid;
    std::string reason; // empty when valid
};

/// Independent re-check of a certificate against t by direct scan only.
CertCheck verify_certificate(const Tournament& t, const Certificate& cert);

/// Route counters for the induction step, for harnesses that assert
/// dual-route coverage.
std::uint64_t extend_primal_routes();
std::uint64_t extend_dual_routes();
void reset_extend_route_counters();

} // namespace u5
