#include "bkp/coords_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bkp {

using nlohmann::json;

std::vector<RawEntry> parse_coordinate_records(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("coordinate file must be a JSON list");
    std::vector<RawEntry> out;
    for (const auto& rec : doc) {
        if (!rec.is_array() || rec.size() != 3 || !rec[0].is_number_integer() || !rec[1].is_number_integer() ||
            !rec[2].is_string())
            throw InputError("each record must be [n, m, \"p/q\"]: " + rec.dump());
        try {
            out.push_back({rec[0].get<int>(), rec[1].get<int>(), parse_rational(rec[2].get<std::string>())});
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("bad rational in ") + rec.dump() + ": " + e.what());
        }
    }
    return out;
}

AffineB parse_affine_b(const std::string& text) { return AffineB::validate(parse_coordinate_records(text)); }

AffineB load_affine_b(const std::string& path) { return parse_affine_b(read_file(path)); }

namespace {

std::string format_entries(const std::map<IndexPair, Rational>& entries) {
    json doc = json::array();
    for (const auto& [key, v] : entries) doc.push_back(json::array({key.first, key.second, to_string(v)}));
    return doc.dump() + "\n";
}

}  // namespace

std::string format_coordinates(const AffineB& b) { return format_entries(b.entries()); }
std::string format_coordinates(const AffineKP& kp) { return format_entries(kp.entries()); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

}  // namespace bkp
