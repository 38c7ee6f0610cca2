#include "valleysplit/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "valleysplit/error.hpp"

namespace valleysplit {

std::string format_number(double value) {
    if (std::isnan(value))
        return {};
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return {buf, res.ptr};
}

namespace {

std::string quote_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

double parse_number(const std::string& field) {
    if (field.empty())
        return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
        throw InvalidArgument("malformed CSV number '" + field + "'");
    return v;
}

/// Splits RFC 4180 records; quoted fields may hold commas, quotes and line breaks.
std::vector<std::vector<std::string>> split_records(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        any = true;
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (ch == '\r' || ch == '\n') {
            if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
                ++i;
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += ch;
        }
    }
    if (any) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace

std::string format_csv(const std::vector<ResultRow>& rows) {
    std::string out(csv_header);
    out += "\r\n";
    for (const auto& r : rows) {
        out += quote_field(r.material);
        for (double v : {r.W_nm, r.F_V_per_m}) {
            out += ',';
            out += format_number(v);
        }
        out += ',';
        out += std::to_string(r.n);
        for (double v : {r.E_meV, r.delta_meV, r.lower_meV, r.upper_meV, r.CV_meV, r.CF_meV, r.Cdelta_meV,
                         r.bulk_meV}) {
            out += ',';
            out += format_number(v);
        }
        out += ',';
        out += quote_field(r.error);
        out += "\r\n";
    }
    return out;
}

std::vector<ResultRow> parse_csv(std::string_view text) {
    const auto records = split_records(text);
    if (records.empty())
        throw InvalidArgument("empty CSV");
    std::string header;
    for (std::size_t i = 0; i < records[0].size(); ++i)
        header += (i ? "," : "") + records[0][i];
    if (header != csv_header)
        throw InvalidArgument("unexpected CSV header");
    std::vector<ResultRow> rows;
    for (std::size_t k = 1; k < records.size(); ++k) {
        const auto& f = records[k];
        if (f.size() != 13)
            throw InvalidArgument("CSV record " + std::to_string(k) + " has " + std::to_string(f.size()) +
                                  " fields, expected 13");
        ResultRow r;
        r.material = f[0];
        r.W_nm = parse_number(f[1]);
        r.F_V_per_m = parse_number(f[2]);
        r.n = static_cast<std::size_t>(std::stoull(f[3]));
        r.E_meV = parse_number(f[4]);
        r.delta_meV = parse_number(f[5]);
        r.lower_meV = parse_number(f[6]);
        r.upper_meV = parse_number(f[7]);
        r.CV_meV = parse_number(f[8]);
        r.CF_meV = parse_number(f[9]);
        r.Cdelta_meV = parse_number(f[10]);
        r.bulk_meV = parse_number(f[11]);
        r.error = f[12];
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    if (rows.empty())
        throw InvalidArgument("no rows to write");
    write_file(path, format_csv(rows));
}

namespace {

template <class Key>
std::set<double> distinct(const std::vector<ResultRow>& rows, Key key) {
    std::set<double> s;
    for (const auto& r : rows)
        s.insert(key(r));
    return s;
}

std::set<std::size_t> subbands_of(const std::vector<ResultRow>& rows) {
    std::set<std::size_t> s;
    for (const auto& r : rows)
        s.insert(r.n);
    return s;
}

std::string gp_string(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'')
            out += '\'';
        out += ch;
    }
    return out + "'";
}

// CSV columns: 2 W_nm, 3 F, 4 n, 5 E, 6 delta, 7 lower, 8 upper
std::string selector(std::size_t n) { return "($4==" + std::to_string(n) + " ? "; }

} // namespace

std::string format_gnuplot(const std::vector<ResultRow>& rows, Figure figure, const std::string& csv_path) {
    if (rows.empty())
        throw InvalidArgument("no rows to plot");
    const auto fields = distinct(rows, [](const ResultRow& r) { return r.F_V_per_m; });
    const auto widths = distinct(rows, [](const ResultRow& r) { return r.W_nm; });
    const auto bands = subbands_of(rows);
    const std::string data = gp_string(csv_path);
    const std::string fig(to_string(figure));

    std::ostringstream gp;
    gp << "# " << fig << ": reconstructed from " << csv_path << "\n";
    gp << "set datafile separator ','\n";
    gp << "set terminal pngcairo size 900,650\n";
    gp << "set output " << gp_string(fig + ".png") << "\n";
    gp << "set grid\n";

    switch (figure) {
    case Figure::fig1: {
        if (fields.size() != 1 || !bands.contains(0))
            throw InvalidArgument("fig1 expects a single-field width sweep containing the ground subband");
        gp << "set title 'Ground-state valley splitting, F = " << format_number(*fields.begin()) << " V/m'\n";
        gp << "set xlabel 'Well width (angstrom)'\n";
        gp << "set ylabel 'Valley splitting (meV)'\n";
        gp << "plot " << data << " every ::1 using ($2*10):" << selector(0) << "$6 : 1/0) with lines lw 2 title 'n = 0'\n";
        break;
    }
    case Figure::fig2: {
        if (fields.size() != 1)
            throw InvalidArgument("fig2 expects a single-field width sweep");
        gp << "set multiplot layout 1,2 title 'Subband levels, F = " << format_number(*fields.begin()) << " V/m'\n";
        gp << "set xlabel 'Well width (nm)'\n";
        gp << "set ylabel 'Energy (meV)'\n";
        gp << "set title '(a) without off-diagonal element'\n";
        gp << "plot";
        bool first = true;
        for (std::size_t n : bands) {
            gp << (first ? " " : ", \\\n     ") << data << " every ::1 using 2:" << selector(n)
               << "$5 : 1/0) with lines title 'E_" << n << "'";
            first = false;
        }
        gp << "\nset title '(b) with off-diagonal element'\n";
        gp << "plot";
        first = true;
        for (std::size_t n : bands) {
            gp << (first ? " " : ", \\\n     ") << data << " every ::1 using 2:" << selector(n)
               << "$7 : 1/0) with lines title 'E_" << n << "^-', \\\n     " << data << " every ::1 using 2:"
               << selector(n) << "$8 : 1/0) with lines title 'E_" << n << "^+'";
            first = false;
        }
        gp << "\nunset multiplot\n";
        break;
    }
    case Figure::fig3: {
        if (widths.size() != 1)
            throw InvalidArgument("fig3 expects a single-width field sweep");
        gp << "set multiplot layout 1,2 title 'W = " << format_number(*widths.begin()) << " nm'\n";
        gp << "set xlabel 'Electric field (V/m)'\n";
        gp << "set ylabel 'Energy (meV)'\n";
        gp << "set title 'Split subband levels'\n";
        gp << "plot";
        bool first = true;
        for (std::size_t n : bands) {
            gp << (first ? " " : ", \\\n     ") << data << " every ::1 using 3:" << selector(n)
               << "$7 : 1/0) with lines title 'E_" << n << "^-', \\\n     " << data << " every ::1 using 3:"
               << selector(n) << "$8 : 1/0) with lines title 'E_" << n << "^+'";
            first = false;
        }
        gp << "\nset title 'Valley splitting'\n";
        gp << "set ylabel 'Valley splitting (meV)'\n";
        gp << "plot " << data << " every ::1 using 3:" << selector(0) << "$6 : 1/0) with linespoints title 'n = 0', \\\n";
        gp << "     " << data << " every ::1 using 3:" << selector(0) << "$12 : 1/0) with lines dt 2 title 'bulk inversion layer'\n";
        gp << "unset multiplot\n";
        break;
    }
    case Figure::fig4: {
        gp << "set title 'Valley splitting by width, field and subband'\n";
        gp << "set xlabel 'Well width (angstrom)'\n";
        gp << "set ylabel 'Valley splitting (meV)'\n";
        gp << "plot";
        bool first = true;
        for (double f : fields) {
            for (std::size_t n : bands) {
                const std::string fs = format_number(f);
                gp << (first ? " " : ", \\\n     ") << data << " every ::1 using ($2*10):(($3==" << fs
                   << " && $4==" << n << ") ? $6 : 1/0) with lines title 'F = " << fs << " V/m, n = " << n << "'";
                first = false;
            }
        }
        gp << "\n";
        break;
    }
    }
    return gp.str();
}

void emit_gnuplot(const std::vector<ResultRow>& rows, Figure figure, const std::string& csv_path,
                  const std::string& script_path) {
    write_file(script_path, format_gnuplot(rows, figure, csv_path));
}

} // namespace valleysplit
