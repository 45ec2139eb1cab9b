#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sgh/hom.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/target.hpp"

namespace sgh {

// Signed graph text format:
//
//   # comment
//   sg <n> <m>
//   <u> <v> <+|->      (m lines)
//
// Blank lines and lines starting with '#' are ignored. Throws Error(Parse)
// with a line number on any malformation.
SignedGraph parse_signed_graph(std::string_view text);

// Canonical form: edges sorted by (u, v) with u < v, LF line endings.
std::string emit_signed_graph(const SignedGraph& g);

// Hex SHA-256 of the canonical serialisation.
std::string graph_digest(const SignedGraph& g);

// One line "v -> image switched|unswitched" per source vertex followed by a
// "verified yes|no" line.
std::string emit_hom(const SignedHom& hom, bool verified);
SignedHom parse_hom(std::string_view text);

std::string emit_certificate(const TargetCertificate& cert);
TargetCertificate parse_certificate(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Connected graph with maximum degree <= delta (exactly delta-regular when
// `regular`), each edge negative with probability neg_prob. Regular graphs
// come from the pairing model with retries; non-regular ones from a random
// degree-capped spanning tree plus random extra edges.
SignedGraph random_bounded_degree_graph(std::size_t n, std::size_t delta, bool regular,
                                        double neg_prob, std::uint64_t seed);

}  // namespace sgh
