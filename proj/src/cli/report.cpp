#include "report.hpp"

#include <sstream>

namespace cobord::cli {

json integer_json(const Integer& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json vector_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(integer_json(x));
    return out;
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vector_json(m.row(i)));
    return out;
}

json scalar_json(const Scalar& v) { return to_string(v); }

json make_report(const json& command, const json& result, const json& warnings) {
    return json{{"command", command}, {"schema", kSchema}, {"result", result}, {"warnings", warnings}};
}

namespace {

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void text(std::ostream& os, const json& j, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_scalar(v)) {
                os << indent << k << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
                os << indent << k << ":";
                for (const auto& x : v)
                    os << " " << scalar_text(x);
                os << "\n";
            } else {
                os << indent << k << ":\n";
                text(os, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_scalar(v)) {
                os << indent << "- " << scalar_text(v) << "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
                os << indent << "-";
                for (const auto& x : v)
                    os << " " << scalar_text(x);
                os << "\n";
            } else {
                os << indent << "-\n";
                text(os, v, indent + "  ");
            }
        }
    } else {
        os << indent << scalar_text(j) << "\n";
    }
}

} // namespace

std::string render(const json& report, Format format) {
    if (format == Format::Json)
        return report.dump(2) + "\n";
    std::ostringstream os;
    text(os, report, "");
    return os.str();
}

} // namespace cobord::cli
