#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bkp/affine_coords.hpp"

namespace bkp {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coordinate files are JSON lists of [n, m, "p/q"] records.
std::vector<RawEntry> parse_coordinate_records(const std::string& text);
AffineB parse_affine_b(const std::string& text);
AffineB load_affine_b(const std::string& path);

// Records in index order; BKP output lists both triangles.
std::string format_coordinates(const AffineB& b);
std::string format_coordinates(const AffineKP& kp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bkp
