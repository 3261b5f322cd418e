#pragma once

#include <filesystem>

#include "bhl/yd.hpp"

namespace bhl {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// name, conductor, dim, then mult, comult, unit, counit, antipode, antipode_inv ("auto" allowed)
std::string write_algebra(const HopfData& H);
HopfPtr parse_algebra(std::string_view text);

// algebra reference (a path), variant tag, name, action, coaction
std::string write_yd(const YDModule& M, const std::string& algebra_ref);
struct YDFile {
    std::string algebra_ref, name;
    Variant variant = Variant::LR_Hop;
    LinMap act, coact;
};
YDFile parse_yd(std::string_view text);
YDModule make_yd(HopfPtr H, const YDFile& f);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);
HopfPtr load_algebra(const std::filesystem::path& p);
// the algebra reference is resolved relative to the YD file
YDModule load_yd(const std::filesystem::path& p);

}  // namespace bhl
