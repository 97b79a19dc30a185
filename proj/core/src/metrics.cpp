#include "barber/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace barber {

namespace {

void check_width(int got, const AnswerSet& a) {
    if (got != a.width)
        throw std::invalid_argument("answer width " + std::to_string(a.width) + " does not match distribution width " +
                                    std::to_string(got));
}

void check_normalized(const Distribution& d, const char* which) {
    const double total = d.total();
    if (std::abs(total - 1.0) > 1e-6)
        throw std::invalid_argument(std::string("hellinger: ") + which + " distribution sums to " +
                                    std::to_string(total));
}

}  // namespace

AnswerSet AnswerSet::parse(std::string_view list, int width) {
    AnswerSet a{width, {}};
    while (!list.empty()) {
        const auto comma = list.find(',');
        auto item = list.substr(0, comma);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (!item.empty()) a.answers.push_back(parse_outcome(item, width));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    if (a.answers.empty()) throw std::invalid_argument("answer set is empty");
    return a;
}

double pst(const Distribution& d, const AnswerSet& a) {
    check_width(d.num_qubits, a);
    double sum = 0.0;
    for (Outcome s : a.answers) sum += d.at(s);
    return sum;
}

double pst(const OutcomeCounts& c, const AnswerSet& a) {
    check_width(c.num_qubits, a);
    if (c.shots == 0) throw std::invalid_argument("pst: zero shots");
    std::uint64_t hits = 0;
    for (Outcome s : a.answers)
        if (auto it = c.counts.find(s); it != c.counts.end()) hits += it->second;
    return static_cast<double>(hits) / static_cast<double>(c.shots);
}

double probability_deviation(const Distribution& d, const AnswerSet& a) {
    check_width(d.num_qubits, a);
    if (a.answers.size() != 2) throw std::invalid_argument("probability deviation needs exactly two answers");
    const double p0 = d.at(a.answers[0]);
    const double p1 = d.at(a.answers[1]);
    const double hi = std::max(p0, p1), lo = std::min(p0, p1);
    if (lo <= 0.0) throw std::domain_error("undefined deviation (vanishing answer)");
    return (hi - lo) / lo * 100.0;
}

double hellinger(const Distribution& p, const Distribution& q) {
    if (p.num_qubits != q.num_qubits) throw std::invalid_argument("hellinger: width mismatch");
    check_normalized(p, "first");
    check_normalized(q, "second");
    double sum = 0.0;
    auto a = p.probs.begin();
    auto b = q.probs.begin();
    while (a != p.probs.end() || b != q.probs.end()) {
        double pa = 0.0, qb = 0.0;
        if (b == q.probs.end() || (a != p.probs.end() && a->first < b->first)) {
            pa = (a++)->second;
        } else if (a == p.probs.end() || b->first < a->first) {
            qb = (b++)->second;
        } else {
            pa = (a++)->second;
            qb = (b++)->second;
        }
        const double diff = std::sqrt(std::max(pa, 0.0)) - std::sqrt(std::max(qb, 0.0));
        sum += diff * diff;
    }
    return std::min(1.0, std::sqrt(0.5 * sum));
}

}  // namespace barber
