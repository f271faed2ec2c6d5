#pragma once

#include "gstar/ara.hpp"
#include "gstar/coding.hpp"
#include "gstar/interpolate.hpp"
#include "gstar/planar.hpp"
#include "io.hpp"

namespace gstar::cli {

json forms_json(const FormList& l, const std::vector<std::string>& names);
json span_json(const LinearSpan& s, const std::vector<std::string>& names);
json primes_json(const MinimalPrimeSet& mp, const std::vector<std::string>& names);
json equality_json(const EqualityReport& r, const std::vector<std::string>& names);
json matrix_rows_json(const Matrix& m);
json subcode_json(const Subcode& d);
json bounds_json(const BoundReport& b);
json locus_match_json(const LocusMatchReport& r);

json gsc_report(const std::vector<std::string>& names, const StarConfig& g,
                const MinimalPrimeSet& mp, const Classification& cls);
json interpolate_report(const std::vector<std::string>& names, const InterpolationResult& r,
                        bool pigeonhole_ok);
json planar_report(const PlanarInterpolation& p);
json code_report(const std::vector<std::string>& names, const GeneratorMatrix& g, std::size_t a,
                 std::uint32_t scan_prime, std::size_t min_dist,
                 const std::vector<CodewordClass>& classes, const std::vector<Subcode>& maximal,
                 const std::vector<Subcode>& components, const MinimalPrimeSet& mp);
json ara_report(const std::vector<std::string>& names, const SVSystem& sys,
                const SvConditionReport& conditions, const BoundReport& bounds,
                const LocusMatchReport& locus);

// renders the report to stdout in the configured format
void emit(const json& report, const RunConfig& config);

std::string to_text(const json& j);

}  // namespace gstar::cli
