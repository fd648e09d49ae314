#include "tap/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tap {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

constexpr const char* kInstanceMagic = "tap-instance";
constexpr const char* kAssignmentMagic = "tap-assignment";
constexpr const char* kFormatVersion = "v1";

// Whitespace-token reader; '#' starts a comment running to end of line.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::string next(const char* what) {
        std::string tok;
        while (in_ >> tok) {
            if (tok.front() == '#') {
                std::string rest;
                std::getline(in_, rest);
                continue;
            }
            return tok;
        }
        throw ValidationError(std::string("unexpected end of input, expected ") + what);
    }

    void expect(const std::string& literal) {
        const std::string tok = next(literal.c_str());
        if (tok != literal)
            throw ValidationError("expected '" + literal + "', found '" + tok + "'");
    }

    double number(const char* what) {
        const std::string tok = next(what);
        double value = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw ValidationError(std::string("invalid number for ") + what + ": '" + tok + "'");
        return value;
    }

    int integer(const char* what) {
        const std::string tok = next(what);
        int value = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw ValidationError(std::string("invalid integer for ") + what + ": '" + tok +
                                  "'");
        return value;
    }

private:
    std::istream& in_;
};

void write_matrix(std::ostream& out, const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Matrix read_matrix(TokenReader& reader, int rows, int cols, const char* what) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = reader.number(what);
    return m;
}

} // namespace

void serialize_instance(const ProblemInstance& instance, std::ostream& out) {
    out << kInstanceMagic << ' ' << kFormatVersion << '\n';
    out << "n " << instance.num_tasks << '\n';
    out << "m " << instance.num_processors << '\n';
    out << "exec_time\n";
    write_matrix(out, instance.exec_time);
    out << "comm_delay\n";
    write_matrix(out, instance.comm_delay);
    out << "comm_rate\n";
    write_matrix(out, instance.comm_rate);
    out << "data_volume\n";
    for (int i = 0; i < instance.num_tasks; ++i)
        out << format_double(instance.data_volume[i]) << (i + 1 < instance.num_tasks ? ' ' : '\n');
    out << "origin\n";
    for (int i = 0; i < instance.num_tasks; ++i)
        out << instance.origin[i] + 1 << (i + 1 < instance.num_tasks ? ' ' : '\n');
    out << "preexisting_load\n";
    for (int p = 0; p < instance.num_processors; ++p)
        out << format_double(instance.preexisting_load[p])
            << (p + 1 < instance.num_processors ? ' ' : '\n');
}

std::string serialize_instance(const ProblemInstance& instance) {
    std::ostringstream out;
    serialize_instance(instance, out);
    return out.str();
}

ProblemInstance parse_instance(std::istream& in) {
    TokenReader reader(in);
    reader.expect(kInstanceMagic);
    reader.expect(kFormatVersion);
    ProblemInstance instance;
    reader.expect("n");
    instance.num_tasks = reader.integer("n");
    reader.expect("m");
    instance.num_processors = reader.integer("m");
    if (instance.num_tasks < 1 || instance.num_processors < 1)
        throw ValidationError("instance file must declare n >= 1 and m >= 1");
    const int n = instance.num_tasks;
    const int m = instance.num_processors;
    reader.expect("exec_time");
    instance.exec_time = read_matrix(reader, n, m, "exec_time");
    reader.expect("comm_delay");
    instance.comm_delay = read_matrix(reader, m, m, "comm_delay");
    reader.expect("comm_rate");
    instance.comm_rate = read_matrix(reader, m, m, "comm_rate");
    reader.expect("data_volume");
    instance.data_volume.resize(n);
    for (int i = 0; i < n; ++i) instance.data_volume[i] = reader.number("data_volume");
    reader.expect("origin");
    instance.origin.resize(n);
    for (int i = 0; i < n; ++i) instance.origin[i] = reader.integer("origin") - 1;
    reader.expect("preexisting_load");
    instance.preexisting_load.resize(m);
    for (int p = 0; p < m; ++p) instance.preexisting_load[p] = reader.number("preexisting_load");
    validate(instance);
    return instance;
}

ProblemInstance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

ProblemInstance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path.string());
    return parse_instance(in);
}

void save_instance_file(const ProblemInstance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path.string());
    serialize_instance(instance, out);
}

void serialize_assignment(const Assignment& assignment, std::ostream& out) {
    out << kAssignmentMagic << ' ' << kFormatVersion << '\n';
    out << "n " << assignment.target.size() << '\n';
    out << "target\n";
    for (std::size_t i = 0; i < assignment.target.size(); ++i)
        out << assignment.target[i] + 1 << (i + 1 < assignment.target.size() ? ' ' : '\n');
}

std::string serialize_assignment(const Assignment& assignment) {
    std::ostringstream out;
    serialize_assignment(assignment, out);
    return out.str();
}

Assignment parse_assignment(std::istream& in) {
    TokenReader reader(in);
    reader.expect(kAssignmentMagic);
    reader.expect(kFormatVersion);
    reader.expect("n");
    const int n = reader.integer("n");
    if (n < 1) throw ValidationError("assignment file must declare n >= 1");
    reader.expect("target");
    Assignment assignment;
    assignment.target.resize(n);
    for (int i = 0; i < n; ++i) assignment.target[i] = reader.integer("target") - 1;
    return assignment;
}

Assignment parse_assignment_string(const std::string& text) {
    std::istringstream in(text);
    return parse_assignment(in);
}

Assignment load_assignment_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open assignment file: " + path.string());
    return parse_assignment(in);
}

void save_assignment_file(const Assignment& assignment, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write assignment file: " + path.string());
    serialize_assignment(assignment, out);
}

std::string render_report(const MetricsReport& report) {
    std::ostringstream out;
    out << "tap-report " << kFormatVersion << '\n';
    out << "m " << report.per_processor_load.size() << '\n';
    out << "per_processor_load";
    for (double l : report.per_processor_load) out << ' ' << format_double(l);
    out << '\n';
    out << "per_processor_utilization";
    for (double u : report.per_processor_utilization) out << ' ' << format_double(u);
    out << '\n';
    out << "makespan " << format_double(report.makespan) << '\n';
    out << "comm_cost " << format_double(report.comm_cost) << '\n';
    out << "ave_utilization " << format_double(report.ave_utilization) << '\n';
    out << "accepted_queues " << report.accepted_queues << '\n';
    out << "ave_accepted_queues " << format_double(report.ave_accepted_queues) << '\n';
    out << "fitness " << format_double(report.fitness) << '\n';
    return out.str();
}

} // namespace tap
