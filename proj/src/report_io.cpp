#include "schottky/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace schottky {

namespace {

void write_json(const Record& v, std::string& out) {
    if (v.is_object()) {
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ", ";
            first = false;
            out += Record(it.key()).dump();
            out += ": ";
            write_json(it.value(), out);
        }
        out += '}';
    } else if (v.is_array()) {
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            write_json(v[i], out);
        }
        out += ']';
    } else if (v.is_number_float()) {
        const double x = v.get<double>();
        out += std::isfinite(x) ? format_number(x, 17) : "null";
    } else {
        out += v.dump();
    }
}

std::string scalar_text(const Record& v, int digits) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_number(v.get<double>(), digits);
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += scalar_text(v[i], digits);
        }
        return s;
    }
    return v.dump();
}

void flatten(const Record& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out,
             int digits) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it.value().is_object()) {
            flatten(it.value(), key, out, digits);
        } else {
            out.emplace_back(key, scalar_text(it.value(), digits));
        }
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

Record interval_record(const std::optional<Interval>& x) {
    if (!x) return Record{{"lo", nullptr}, {"hi", nullptr}};
    return Record{{"lo", x->lo()}, {"hi", x->hi()}};
}

Record point_record(const Point& p) {
    Record r = Record::object();
    for (const auto& [name, value] : p) r[name] = value;
    return r;
}

std::string point_text(const Point& p) {
    std::string s;
    for (const auto& [name, value] : p) {
        if (!s.empty()) s += ';';
        s += name + "=" + format_number(value, 17);
    }
    return s;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::JSON;
    if (name == "csv") return OutputFormat::CSV;
    if (name == "table") return OutputFormat::PlainTable;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_number(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string render(const std::vector<Record>& rows, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::JSON) {
        out += '[';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += i ? ",\n " : "";
            write_json(rows[i], out);
        }
        out += "]\n";
        return out;
    }
    const int digits = format == OutputFormat::CSV ? 17 : 12;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    for (const Record& r : rows) {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(r, "", flat, digits);
        if (header.empty()) {
            for (const auto& kv : flat) header.push_back(kv.first);
        }
        std::vector<std::string> line(header.size());
        for (const auto& [k, v] : flat) {
            const auto it = std::find(header.begin(), header.end(), k);
            if (it != header.end()) line[static_cast<std::size_t>(it - header.begin())] = v;
        }
        cells.push_back(std::move(line));
    }
    if (format == OutputFormat::CSV) {
        for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + csv_escape(header[i]);
        out += '\n';
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + csv_escape(line[i]);
            out += '\n';
        }
        return out;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) s += "  ";
            s += line[i];
            if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
        }
        out += s + '\n';
    };
    emit(header);
    for (const auto& line : cells) emit(line);
    return out;
}

Record to_record(const RegionReport& r) {
    Record out;
    out["name"] = r.name;
    out["status"] = to_string(r.status);
    out["min_slack"] = interval_record(r.min_slack);
    out["witness"] = point_record(r.witness);
    out["cells_processed"] = r.cells_processed;
    out["max_depth"] = r.max_depth;
    return out;
}

Record to_record(const CertReport& r) {
    Record out;
    out["family"] = r.family;
    out["name"] = r.name;
    out["status"] = to_string(r.status);
    out["min_slack"] = interval_record(r.min_slack);
    out["witness"] = point_record(r.witness);
    out["cells_processed"] = r.cells_processed;
    out["max_depth"] = r.max_depth;
    out["tail_status"] = to_string(r.tail_status);
    out["exempt"] = r.exempt;
    Record regions = Record::array();
    for (const auto& reg : r.regions) regions.push_back(to_record(reg));
    out["regions"] = regions;
    return out;
}

Record to_summary(const CertReport& r) {
    Record out;
    out["family"] = r.family;
    out["status"] = to_string(r.status);
    out["min_slack_lo"] = r.min_slack ? Record(r.min_slack->lo()) : Record(nullptr);
    out["min_slack_hi"] = r.min_slack ? Record(r.min_slack->hi()) : Record(nullptr);
    out["tail_status"] = to_string(r.tail_status);
    out["cells_processed"] = r.cells_processed;
    out["max_depth"] = r.max_depth;
    out["exempt"] = r.exempt;
    out["witness"] = point_text(r.witness);
    return out;
}

std::string reports_json(const std::vector<CertReport>& reports) {
    std::vector<Record> rows;
    for (const auto& r : reports) rows.push_back(to_record(r));
    return render(rows, OutputFormat::JSON);
}

std::string reports_csv(const std::vector<CertReport>& reports) {
    std::vector<Record> rows;
    for (const auto& r : reports) rows.push_back(to_summary(r));
    return render(rows, OutputFormat::CSV);
}

} // namespace schottky
