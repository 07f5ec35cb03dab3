#include "coloc/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "coloc/errors.hpp"

namespace coloc {

namespace {

const char* kHeader = "id,feature,shape_type,coords,amount";

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ValidationError("dataset csv line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, std::size_t line_no, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(line_no, "bad " + what + " '" + text + "'");
    }
    return v;
}

std::vector<Point2D> parse_coords(const std::string& text, std::size_t line_no) {
    std::vector<Point2D> pts;
    for (const auto& pair : split(text, ';')) {
        std::istringstream ss(pair);
        std::string xs, ys, extra;
        if (!(ss >> xs >> ys) || (ss >> extra)) {
            fail(line_no, "bad coordinate pair '" + pair + "'");
        }
        pts.push_back(Point2D{parse_double(xs, line_no, "x coordinate"),
                              parse_double(ys, line_no, "y coordinate")});
    }
    if (pts.empty()) fail(line_no, "empty coordinate list");
    return pts;
}

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::vector<SpatialObject> ingest(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("dataset csv: empty file, header missing");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) {
        throw ValidationError(std::string("dataset csv: expected header '") + kHeader + "'");
    }

    std::vector<SpatialObject> objects;
    std::unordered_set<std::string> seen_ids;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto fields = split(line, ',');
        if (fields.size() != 5) fail(line_no, "expected 5 fields");

        SpatialObject obj;
        obj.id = fields[0];
        obj.feature = fields[1];
        if (!valid_token(obj.id)) fail(line_no, "bad id '" + obj.id + "'");
        if (!valid_token(obj.feature)) fail(line_no, "bad feature '" + obj.feature + "'");
        if (!seen_ids.insert(obj.id).second) fail(line_no, "duplicate id '" + obj.id + "'");

        std::vector<Point2D> pts = parse_coords(fields[3], line_no);
        const std::string& shape_type = fields[2];
        if (shape_type == "point") {
            if (pts.size() != 1) fail(line_no, "point needs exactly one coordinate pair");
            obj.shape = pts[0];
        } else if (shape_type == "line") {
            if (pts.size() < 2) fail(line_no, "line needs >= 2 coordinate pairs");
            obj.shape = Polyline{std::move(pts)};
        } else if (shape_type == "polygon") {
            if (pts.size() > 3 && pts.front() == pts.back()) pts.pop_back();
            if (pts.size() < 3) fail(line_no, "polygon ring needs >= 3 coordinate pairs");
            obj.shape = Polygon{std::move(pts)};
        } else {
            fail(line_no, "unknown shape_type '" + shape_type + "'");
        }

        if (!fields[4].empty()) {
            double amount = parse_double(fields[4], line_no, "amount");
            if (amount < 0.0) fail(line_no, "negative amount");
            obj.amount = amount;
        }

        try {
            validate_object(obj);
        } catch (const ValidationError& e) {
            fail(line_no, e.what());
        }
        objects.push_back(std::move(obj));
    }
    return objects;
}

std::vector<SpatialObject> ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open dataset file '" + path + "'");
    return ingest(in);
}

namespace {

std::string double_str(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void write_coords(std::string& out, const std::vector<Point2D>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ';';
        out += double_str(pts[i].x);
        out += ' ';
        out += double_str(pts[i].y);
    }
}

}  // namespace

void serialize(std::ostream& out, std::span<const SpatialObject> dataset) {
    out << kHeader << '\n';
    std::string line;
    for (const auto& obj : dataset) {
        line.clear();
        line += obj.id;
        line += ',';
        line += obj.feature;
        line += ',';
        if (const auto* point = std::get_if<Point2D>(&obj.shape)) {
            line += "point,";
            write_coords(line, {*point});
        } else if (const auto* poly = std::get_if<Polyline>(&obj.shape)) {
            line += "line,";
            write_coords(line, poly->points);
        } else {
            line += "polygon,";
            write_coords(line, std::get<Polygon>(obj.shape).ring);
        }
        line += ',';
        if (obj.amount) line += double_str(*obj.amount);
        line += '\n';
        out << line;
    }
}

void serialize_file(const std::string& path, std::span<const SpatialObject> dataset) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write dataset file '" + path + "'");
    serialize(out, dataset);
}

}  // namespace coloc
