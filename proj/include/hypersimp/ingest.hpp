#ifndef HYPERSIMP_INGEST_HPP_
#define HYPERSIMP_INGEST_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

/// One timestamped face-to-face contact.
struct ContactRecord {
  std::int64_t timestamp = 0;
  std::string a;
  std::string b;
  std::optional<std::int64_t> duration;
};

/// Seconds credited to a contact row without a duration column (the
/// sampling interval of the public contact corpora).
inline constexpr std::int64_t kDefaultContactSeconds = 20;

/// Rows of `t,a,b[,duration]`, separated by commas, tabs or spaces. A
/// leading header row and `#` comments are skipped. Throws ParseError with
/// the 1-based row number on a malformed row.
std::vector<ContactRecord> parse_contacts(std::string_view text);
/// Rows of `source,target` meaning "source names target as a friend".
std::vector<std::pair<std::string, std::string>> parse_friendships(std::string_view text);

/// Maximal cliques of size >= 1 of a simple undirected graph, each sorted,
/// listed in lexicographic order. Bron-Kerbosch with Tomita pivoting.
std::vector<std::vector<std::string>> maximal_cliques(
    const std::vector<std::string>& nodes, const std::vector<std::pair<std::string, std::string>>& edges);

/// Edge (a, b) iff the accumulated contact time of the pair is strictly
/// greater than `min_total_seconds`; one hyperedge per maximal clique with
/// at least two members.
Hypergraph ingest_contacts(const std::vector<ContactRecord>& records, std::int64_t min_total_seconds = 40);

/// Keeps pairs reported in both directions; one hyperedge per maximal clique
/// with at least two members.
Hypergraph ingest_friendship(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace hypersimp

#endif  // HYPERSIMP_INGEST_HPP_
