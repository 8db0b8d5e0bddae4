#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "srips/complex.hpp"
#include "srips/crushing.hpp"
#include "srips/filtration.hpp"
#include "srips/homology.hpp"
#include "srips/nerve.hpp"
#include "srips/reconstruction.hpp"
#include "srips/union_crushing.hpp"

namespace srips {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal; "inf" / "-inf" for infinities.
std::string format_number(double value);
// Json number, or the string "inf" when the value is infinite.
Json number_json(double value);

// One simplex per line, "dim v0 v1 ... vk", ordered by dimension then lexicographically.
void write_complex_text(std::ostream& out, const SimplicialComplex& complex);
// Same, with the birth appended; filtration order.
void write_filtration_text(std::ostream& out, const Filtration& filtration);
// Reads the complex text format (a trailing birth column is ignored). Throws
// ParseError on malformed lines and ValidationError on a non-closed set.
SimplicialComplex read_complex_text(std::istream& in);

Json complex_json(const SimplicialComplex& complex, bool with_simplices = true);
Json filtration_json(const Filtration& filtration);
Json betti_json(const std::vector<std::size_t>& betti);

// "dim,birth,death" header then one interval per line.
void write_barcode_csv(std::ostream& out, const Barcode& barcode);
Json barcode_json(const Barcode& barcode);
// One row per interval, scaled to `width` columns over [0, max finite value].
std::string render_barcode_ascii(const Barcode& barcode, std::size_t width = 60);
std::string render_barcode_svg(const Barcode& barcode);

Json crush_json(const CrushResult& result, bool with_certificates);
Json union_crush_json(const UnionCrushResult& result);
Json good_cover_json(const GoodCoverReport& report);
Json intersection_json(const IntersectionReport& report);
Json reconstruction_json(const ReconstructionReport& report);

}  // namespace srips
