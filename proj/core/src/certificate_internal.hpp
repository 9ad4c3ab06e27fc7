#pragma once

#include "ecassoc/certificate.hpp"

#include <optional>
#include <string>

namespace ecassoc::detail {

std::string vector_string(const Vector& v);

/// Appends a check comparing two points; raises `code` when they differ.
void expect_points(std::vector<Check>& checks, std::string name, std::string claim, const CurvePoint& lhs,
                   const CurvePoint& rhs, ErrorCode code = ErrorCode::ChainCheckFailed);

/// Appends a check comparing two points where inequality is the claim.
void expect_distinct(std::vector<Check>& checks, std::string name, std::string claim, const CurvePoint& lhs,
                     const CurvePoint& rhs, ErrorCode code = ErrorCode::ChainCheckFailed);

/// Appends a boolean check; raises `code` when it is false.
void expect(std::vector<Check>& checks, std::string name, std::string claim,
            std::map<std::string, std::string> witnesses, bool pass, ErrorCode code);

void fill_header(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp);

/// Records the node's patterns and the final P9 = P10 check and verdict.
void finish_node(Certificate& node, const TenPoints& tp);

void prop1_into(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp, const CertifyOptions& options);

/// Whether lemma 6..10 governs the triple in either orientation.
bool lemma_applies(int lemma, const TenPoints& tp);

void reduce_into(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp, int depth,
                 std::optional<int> hint, const CertifyOptions& options);

/// Routes the triple: obvious case, then the hinted lemma if its pattern
/// holds, then prop1 (P9 side, then P10 side), then reduction.
void route(Certificate& node, const WeierstrassCurve& e, const TenPoints& tp, int depth, std::optional<int> hint,
           const CertifyOptions& options);

}  // namespace ecassoc::detail
