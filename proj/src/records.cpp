#include <cuboidforge/records.hpp>

#include <json.hpp>

#include <sstream>

namespace cuboidforge {

namespace {

constexpr const char* csv_header = "a,b,c,class,d_ab,d_ac,d_bc,g,strategy,params,primitive";

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string opt_field(const std::optional<u64>& v) {
    return v ? std::to_string(*v) : std::string{};
}

// One CSV line -> fields, honoring double-quote escaping.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line: " + line);
    fields.push_back(std::move(cur));
    return fields;
}

u64 parse_u64_field(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed integer field: '" + s + "'");
    return std::stoull(s);
}

std::optional<u64> parse_opt_field(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_u64_field(s);
}

bool parse_bool_field(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("malformed boolean field: '" + s + "'");
}

nlohmann::ordered_json record_to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["class"] = to_string(r.cls);
    auto put = [&](const char* name, const std::optional<u64>& v) {
        if (v)
            j[name] = *v;
        else
            j[name] = nullptr;
    };
    put("d_ab", r.d_ab);
    put("d_ac", r.d_ac);
    put("d_bc", r.d_bc);
    put("g", r.g);
    j["strategy"] = r.strategy;
    j["params"] = r.params;
    j["primitive"] = r.primitive;
    return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r{};
    r.a = j.at("a").get<u64>();
    r.b = j.at("b").get<u64>();
    r.c = j.at("c").get<u64>();
    r.cls = cuboid_class_from_string(j.at("class").get<std::string>());
    auto opt = [&](const char* name) -> std::optional<u64> {
        const auto& v = j.at(name);
        if (v.is_null()) return std::nullopt;
        return v.get<u64>();
    };
    r.d_ab = opt("d_ab");
    r.d_ac = opt("d_ac");
    r.d_bc = opt("d_bc");
    r.g = opt("g");
    r.strategy = j.at("strategy").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.primitive = j.at("primitive").get<bool>();
    return r;
}

} // namespace

RecordFormat record_format_from_string(const std::string& label) {
    if (label == "csv") return RecordFormat::Csv;
    if (label == "jsonl") return RecordFormat::Jsonl;
    throw std::invalid_argument("unknown record format: " + label);
}

ResultRecord record_from_cuboid(const Cuboid& k, const std::string& strategy,
                                const std::string& params) {
    DiagonalReport rep = diagonal_report(k);
    ResultRecord r{k.a,       k.b,      k.c,    classify(rep), rep.d_ab,
                   rep.d_ac,  rep.d_bc, rep.g,  strategy,      params,
                   is_primitive(k)};
    return r;
}

ResultRecord record_from_finding(const Finding& fnd) {
    ResultRecord r = record_from_cuboid(fnd.cuboid, fnd.strategy, fnd.params);
    if (r.cls != fnd.cls)
        throw std::runtime_error("finding does not re-verify: stored class " +
                                 to_string(fnd.cls) + ", recomputed " + to_string(r.cls));
    return r;
}

std::vector<ResultRecord> records_from_report(const SearchReport& report) {
    std::vector<ResultRecord> records;
    records.reserve(report.found.size());
    for (const Finding& fnd : report.found) records.push_back(record_from_finding(fnd));
    return records;
}

Finding finding_from_record(const ResultRecord& r) {
    verify_record(r);
    Finding fnd{Cuboid(r.a, r.b, r.c), r.cls, r.strategy, r.params,
                provenance_key_from_params(r.params)};
    return fnd;
}

std::string write_records(const std::vector<ResultRecord>& records, RecordFormat format) {
    std::ostringstream os;
    if (format == RecordFormat::Csv) {
        os << csv_header << "\n";
        for (const auto& r : records)
            os << r.a << ',' << r.b << ',' << r.c << ',' << to_string(r.cls) << ','
               << opt_field(r.d_ab) << ',' << opt_field(r.d_ac) << ',' << opt_field(r.d_bc)
               << ',' << opt_field(r.g) << ',' << r.strategy << ',' << csv_quote(r.params)
               << ',' << (r.primitive ? "true" : "false") << "\n";
    } else {
        for (const auto& r : records) os << record_to_json(r).dump() << "\n";
    }
    return os.str();
}

std::vector<ResultRecord> parse_records(const std::string& text, RecordFormat format) {
    std::vector<ResultRecord> records;
    std::istringstream is(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (format == RecordFormat::Csv && !saw_header) {
            if (line != csv_header)
                throw std::invalid_argument("unexpected CSV header: " + line);
            saw_header = true;
            continue;
        }
        if (format == RecordFormat::Csv) {
            std::vector<std::string> f = split_csv(line);
            if (f.size() != 11)
                throw std::invalid_argument("expected 11 CSV fields, got " +
                                            std::to_string(f.size()) + ": " + line);
            ResultRecord r{};
            r.a = parse_u64_field(f[0]);
            r.b = parse_u64_field(f[1]);
            r.c = parse_u64_field(f[2]);
            r.cls = cuboid_class_from_string(f[3]);
            r.d_ab = parse_opt_field(f[4]);
            r.d_ac = parse_opt_field(f[5]);
            r.d_bc = parse_opt_field(f[6]);
            r.g = parse_opt_field(f[7]);
            r.strategy = f[8];
            r.params = f[9];
            r.primitive = parse_bool_field(f[10]);
            records.push_back(std::move(r));
        } else {
            records.push_back(record_from_json(nlohmann::json::parse(line)));
        }
    }
    if (format == RecordFormat::Csv && !saw_header && !text.empty())
        throw std::invalid_argument("CSV input has no header line");
    return records;
}

void verify_record(const ResultRecord& r) {
    Cuboid k(r.a, r.b, r.c);
    if (k.a != r.a || k.b != r.b || k.c != r.c)
        throw std::runtime_error("record edges are not in canonical order");
    DiagonalReport rep = diagonal_report(k);
    if (classify(rep) != r.cls)
        throw std::runtime_error("record does not re-verify: stored class '" +
                                 to_string(r.cls) + "' but edges classify as '" +
                                 to_string(classify(rep)) + "'");
    if (rep.d_ab != r.d_ab || rep.d_ac != r.d_ac || rep.d_bc != r.d_bc || rep.g != r.g)
        throw std::runtime_error("record does not re-verify: stored diagonals disagree "
                                 "with the recomputed report");
    if (is_primitive(k) != r.primitive)
        throw std::runtime_error("record does not re-verify: primitive flag is wrong");
}

} // namespace cuboidforge
