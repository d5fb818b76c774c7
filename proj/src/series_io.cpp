#include "rfi/series_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        fields.push_back(trim(line.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no)
{
    double value = 0.0;
    // from_chars rejects a leading '+', which some writers emit.
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw IoError(fmt::format("line {}: '{}' is not a number", line_no, field));
    }
    return value;
}

struct Row {
    std::size_t line = 0;
    std::vector<double> v;
    double operator[](std::size_t i) const { return v[i]; }
};

/// Reads header plus numeric rows with exactly `columns` fields.
std::vector<Row> parse_table(std::istream& in, std::string_view header,
                                             std::size_t columns)
{
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (!saw_header) {
            if (body != header) {
                throw IoError(fmt::format("line {}: expected header '{}', got '{}'", line_no,
                                          header, body));
            }
            saw_header = true;
            continue;
        }
        const auto fields = split(body);
        if (fields.size() != columns) {
            throw IoError(fmt::format("line {}: expected {} fields, got {}", line_no, columns,
                                      fields.size()));
        }
        Row row{line_no, {}};
        for (const auto f : fields) {
            row.v.push_back(parse_number(f, line_no));
        }
        rows.push_back(std::move(row));
    }
    if (!saw_header) {
        throw IoError(fmt::format("missing header '{}'", header));
    }
    return rows;
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    }
    return in;
}

} // namespace

std::string format_series_csv(const TorreySeries1D& series)
{
    std::string out = "tau_s,s\n";
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        out += fmt::format("{:.17g},{:.17g}\n", series.tau[k], series.values[k]);
    }
    return out;
}

std::string format_series_csv(const TorreySeries2D& series)
{
    std::string out = "tauH_s,tauP_s,s\n";
    for (std::size_t k = 0; k < series.tauH.size(); ++k) {
        for (std::size_t l = 0; l < series.tauP.size(); ++l) {
            out += fmt::format("{:.17g},{:.17g},{:.17g}\n", series.tauH[k], series.tauP[l],
                               series.at(k, l));
        }
    }
    return out;
}

std::string format_spectrum_csv(const SpectralProfile1D& profile)
{
    std::string out = "nu_q_hz,S\n";
    for (std::size_t m = 0; m < profile.values.size(); ++m) {
        out += fmt::format("{:.17g},{:.17g}\n", profile.freq[m], profile.values[m]);
    }
    return out;
}

std::string format_spectrum_csv(const SpectralProfile2D& profile)
{
    std::string out = "nuH_q_hz,nuP_q_hz,S\n";
    for (std::size_t m = 0; m < profile.freqH.size(); ++m) {
        for (std::size_t n = 0; n < profile.freqP.size(); ++n) {
            out += fmt::format("{:.17g},{:.17g},{:.17g}\n", profile.freqH[m], profile.freqP[n],
                               profile.at(m, n));
        }
    }
    return out;
}

TorreySeries1D parse_series_1d(std::istream& in)
{
    const auto rows = parse_table(in, "tau_s,s", 2);
    TorreySeries1D series;
    for (const auto& r : rows) {
        series.tau.push_back(r[0]);
        series.values.push_back(r[1]);
    }
    check_tau_grid(series.tau);
    return series;
}

TorreySeries2D parse_series_2d(std::istream& in)
{
    const auto rows = parse_table(in, "tauH_s,tauP_s,s", 3);
    if (rows.empty()) {
        throw IoError("2D series has no data rows");
    }
    TorreySeries2D series;
    // The tauP axis is the run of rows sharing the first tauH value.
    for (const auto& r : rows) {
        if (r[0] != rows.front()[0]) {
            break;
        }
        series.tauP.push_back(r[1]);
    }
    const std::size_t nP = series.tauP.size();
    if (rows.size() % nP != 0) {
        throw IoError(fmt::format("2D series has {} rows, not a multiple of the {} tauP values",
                                  rows.size(), nP));
    }
    for (std::size_t k = 0; k < rows.size() / nP; ++k) {
        series.tauH.push_back(rows[k * nP][0]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t k = i / nP;
        const std::size_t l = i % nP;
        if (rows[i][0] != series.tauH[k] || rows[i][1] != series.tauP[l]) {
            throw IoError(
                fmt::format("line {}: row is not in tauH-major long format", rows[i].line));
        }
        series.values.push_back(rows[i][2]);
    }
    check_tau_grid(series.tauH);
    check_tau_grid(series.tauP);
    return series;
}

TorreySeries1D read_series_1d(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return parse_series_1d(in);
}

TorreySeries2D read_series_2d(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return parse_series_2d(in);
}

std::string read_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError(fmt::format("cannot open '{}' for writing", tmp.string()));
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw IoError(fmt::format("write to '{}' failed", tmp.string()));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(fmt::format("cannot move output into '{}'", path.string()));
    }
}

} // namespace rfi
