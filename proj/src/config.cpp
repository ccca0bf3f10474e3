#include "rosette/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "rosette/error.hpp"

namespace rosette {

namespace {

// Upper bounds that keep a single request's output size sane.
constexpr int kMaxN = 10'000;
constexpr int kMaxS = 1'000;
constexpr int kMaxSize = 100'000;

constexpr std::array kKnownKeys{
    "mode", "N",      "S",    "radii", "alpha",       "spr",            "special",      "base_rotation", "R",
    "rows", "cols",   "gap_N", "inner_ratio", "fill_down_gaps", "stroke_width", "size", "margin_ratio"};

constexpr std::array kTilingKeys{"R", "rows", "cols", "gap_N", "inner_ratio", "fill_down_gaps"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

struct Entry {
    std::string value;
    int line;
};

class Reader {
public:
    explicit Reader(std::map<std::string, Entry, std::less<>> entries) : entries_(std::move(entries)) {}

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    const Entry& require(std::string_view key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw SyntaxError(0, "missing required key '" + std::string(key) + "'");
        return it->second;
    }

    int get_int(std::string_view key, int fallback) const {
        return has(key) ? parse_int(key, require(key)) : fallback;
    }

    double get_real(std::string_view key, double fallback) const {
        return has(key) ? parse_real(key, require(key).value, require(key).line) : fallback;
    }

    static int parse_int(std::string_view key, const Entry& e) {
        int v = 0;
        const char* end = e.value.data() + e.value.size();
        auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
        if (ec != std::errc{} || ptr != end || e.value.empty())
            throw SyntaxError(e.line, "invalid integer for '" + std::string(key) + "': '" + e.value + "'");
        return v;
    }

    static double parse_real(std::string_view key, std::string_view text, int line) {
        double v = 0.0;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc{} || ptr != end || text.empty())
            throw SyntaxError(line, "invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
        return v;
    }

private:
    std::map<std::string, Entry, std::less<>> entries_;
};

std::vector<double> parse_radii(const Entry& e) {
    std::vector<double> radii;
    std::string_view rest = e.value;
    while (true) {
        const auto comma = rest.find(',');
        radii.push_back(Reader::parse_real("radii", trim(rest.substr(0, comma)), e.line));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return radii;
}

void write_real(std::ostream& os, double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    os.write(buf.data(), ptr - buf.data());
}

void require_field(bool ok, const char* field, const std::string& reason) {
    if (!ok) throw ValidationError(field, reason);
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::star ? "star" : "tiling"; }

void ConfigDoc::validate() const {
    require_field(pattern.n <= kMaxN, "N", "must be <= " + std::to_string(kMaxN));
    require_field(pattern.s <= kMaxS, "S", "must be <= " + std::to_string(kMaxS));
    try {
        pattern.validate();
        if (mode == Mode::tiling && !tiling) throw ValidationError("mode", "tiling mode needs tiling fields");
        if (tiling) tiling_spec().validate();
    } catch (const ValidationError&) {
        throw;
    } catch (const InvalidParameter& e) {
        throw ValidationError(e.field(), e.reason());
    } catch (const MotifCapExceeded& e) {
        throw ValidationError("rows", e.what());
    }
    require_field(std::isfinite(render.stroke_width) && render.stroke_width > 0.0, "stroke_width",
                  "must be finite and > 0");
    require_field(render.size >= 1 && render.size <= kMaxSize, "size",
                  "must be in 1.." + std::to_string(kMaxSize));
    require_field(std::isfinite(render.margin_ratio) && render.margin_ratio >= 0.0 && render.margin_ratio <= 1.0,
                  "margin_ratio", "must lie in [0, 1]");
}

TilingSpec ConfigDoc::tiling_spec() const {
    const TilingFields t = tiling.value_or(TilingFields{});
    TilingSpec spec;
    spec.circle_pattern = pattern;
    spec.gap_fill = {t.gap_n, t.inner_ratio};
    spec.radius = t.radius;
    spec.rows = t.rows;
    spec.cols = t.cols;
    spec.fill_down_gaps = t.fill_down_gaps;
    return spec;
}

ConfigDoc parse_config(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw SyntaxError(line_no, "empty key");
        if (!is_known(key)) throw SyntaxError(line_no, "unknown key '" + key + "'");
        if (!entries.emplace(key, Entry{value, line_no}).second)
            throw SyntaxError(line_no, "duplicate key '" + key + "'");
    }

    const Reader in(std::move(entries));
    ConfigDoc doc;

    const Entry& mode = in.require("mode");
    if (mode.value == "star") {
        doc.mode = Mode::star;
    } else if (mode.value == "tiling") {
        doc.mode = Mode::tiling;
    } else {
        throw SyntaxError(mode.line, "mode must be 'star' or 'tiling', got '" + mode.value + "'");
    }

    doc.pattern.n = Reader::parse_int("N", in.require("N"));
    doc.pattern.s = Reader::parse_int("S", in.require("S"));
    doc.pattern.radii = parse_radii(in.require("radii"));
    doc.pattern.alpha = in.get_real("alpha", 0.0);
    doc.pattern.spr = in.get_real("spr", 0.0);
    doc.pattern.base_rotation = in.get_real("base_rotation", 0.0);
    if (in.has("special") && in.require("special").value != "none")
        doc.pattern.special = Reader::parse_int("special", in.require("special"));

    bool any_tiling = doc.mode == Mode::tiling;
    for (const char* k : kTilingKeys) any_tiling = any_tiling || in.has(k);
    if (any_tiling) {
        TilingFields t;
        t.radius = in.get_real("R", t.radius);
        t.rows = in.get_int("rows", t.rows);
        t.cols = in.get_int("cols", t.cols);
        t.gap_n = in.get_int("gap_N", t.gap_n);
        t.inner_ratio = in.get_real("inner_ratio", t.inner_ratio);
        if (in.has("fill_down_gaps")) {
            const Entry& e = in.require("fill_down_gaps");
            if (e.value == "true") {
                t.fill_down_gaps = true;
            } else if (e.value == "false") {
                t.fill_down_gaps = false;
            } else {
                throw SyntaxError(e.line, "fill_down_gaps must be 'true' or 'false'");
            }
        }
        doc.tiling = t;
    }

    doc.render.stroke_width = in.get_real("stroke_width", doc.render.stroke_width);
    doc.render.size = in.get_int("size", doc.render.size);
    doc.render.margin_ratio = in.get_real("margin_ratio", doc.render.margin_ratio);

    doc.validate();
    return doc;
}

std::string serialize_config(const ConfigDoc& doc) {
    std::ostringstream os;
    const PatternSpec& p = doc.pattern;
    os << "mode = " << to_string(doc.mode) << '\n';
    os << "N = " << p.n << '\n';
    os << "S = " << p.s << '\n';
    os << "radii = ";
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        if (i) os << ", ";
        write_real(os, p.radii[i]);
    }
    os << '\n';
    os << "alpha = ";
    write_real(os, p.alpha);
    os << "\nspr = ";
    write_real(os, p.spr);
    os << "\nspecial = ";
    if (p.special) {
        os << *p.special;
    } else {
        os << "none";
    }
    os << "\nbase_rotation = ";
    write_real(os, p.base_rotation);
    os << '\n';
    if (doc.tiling) {
        const TilingFields& t = *doc.tiling;
        os << "R = ";
        write_real(os, t.radius);
        os << "\nrows = " << t.rows << "\ncols = " << t.cols << "\ngap_N = " << t.gap_n << "\ninner_ratio = ";
        write_real(os, t.inner_ratio);
        os << "\nfill_down_gaps = " << (t.fill_down_gaps ? "true" : "false") << '\n';
    }
    os << "stroke_width = ";
    write_real(os, doc.render.stroke_width);
    os << "\nsize = " << doc.render.size << "\nmargin_ratio = ";
    write_real(os, doc.render.margin_ratio);
    os << '\n';
    return os.str();
}

}  // namespace rosette
