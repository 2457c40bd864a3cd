#include "naqc/tomography.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace naqc {

std::string_view label_text(ProjectorLabel label) noexcept
{
    switch (label) {
    case ProjectorLabel::ZPlus: return "z+";
    case ProjectorLabel::ZMinus: return "z-";
    case ProjectorLabel::XPlus: return "x+";
    case ProjectorLabel::XMinus: return "x-";
    case ProjectorLabel::YPlus: return "y+";
    case ProjectorLabel::YMinus: return "y-";
    }
    return "?";
}

ProjectorLabel parse_label(std::string_view text)
{
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (text.size() >= 2) {
        const std::string_view sign = text.substr(1);
        const bool plus = sign == "+";
        const bool minus = sign == "-" || sign == unicode_minus;
        if (plus || minus) {
            switch (text[0]) {
            case 'z': return plus ? ProjectorLabel::ZPlus : ProjectorLabel::ZMinus;
            case 'x': return plus ? ProjectorLabel::XPlus : ProjectorLabel::XMinus;
            case 'y': return plus ? ProjectorLabel::YPlus : ProjectorLabel::YMinus;
            default: break;
            }
        }
    }
    throw std::invalid_argument("unknown projector label '" + std::string(text) + "'");
}

ComplexMatrix label_projector(ProjectorLabel label)
{
    switch (label) {
    case ProjectorLabel::ZPlus: return projector({PauliAxis::Z, 0});
    case ProjectorLabel::ZMinus: return projector({PauliAxis::Z, 1});
    case ProjectorLabel::XPlus: return projector({PauliAxis::X, 0});
    case ProjectorLabel::XMinus: return projector({PauliAxis::X, 1});
    case ProjectorLabel::YPlus: return projector({PauliAxis::Y, 0});
    case ProjectorLabel::YMinus: return projector({PauliAxis::Y, 1});
    }
    throw std::logic_error("label_projector: bad label");
}

std::string_view scheme_name(SchemeKind kind) noexcept
{
    switch (kind) {
    case SchemeKind::Minimal16: return "minimal16";
    case SchemeKind::Overcomplete36: return "overcomplete36";
    case SchemeKind::Custom: return "custom";
    }
    return "?";
}

SchemeKind parse_scheme(std::string_view name)
{
    if (name == "minimal16")
        return SchemeKind::Minimal16;
    if (name == "overcomplete36")
        return SchemeKind::Overcomplete36;
    throw std::invalid_argument("unknown tomography scheme '" + std::string(name) + "'");
}

TomoScheme::TomoScheme(SchemeKind kind, std::vector<TomoSetting> settings)
    : kind_(kind), settings_(std::move(settings))
{
    effects_.reserve(settings_.size());
    for (const TomoSetting& s : settings_)
        effects_.push_back(kron(label_projector(s.a), label_projector(s.b)));
}

TomoScheme TomoScheme::minimal16()
{
    using L = ProjectorLabel;
    constexpr std::array<L, 4> single{L::ZPlus, L::ZMinus, L::XPlus, L::YPlus};
    std::vector<TomoSetting> settings;
    for (L a : single)
        for (L b : single)
            settings.push_back({a, b});
    return TomoScheme(SchemeKind::Minimal16, std::move(settings));
}

TomoScheme TomoScheme::overcomplete36()
{
    using L = ProjectorLabel;
    constexpr std::array<std::array<L, 2>, 3> bases{{{L::ZPlus, L::ZMinus}, {L::XPlus, L::XMinus}, {L::YPlus, L::YMinus}}};
    std::vector<TomoSetting> settings;
    for (const auto& basis_a : bases)
        for (const auto& basis_b : bases)
            for (L a : basis_a)
                for (L b : basis_b)
                    settings.push_back({a, b});
    return TomoScheme(SchemeKind::Overcomplete36, std::move(settings));
}

TomoScheme TomoScheme::of(SchemeKind kind)
{
    switch (kind) {
    case SchemeKind::Minimal16: return minimal16();
    case SchemeKind::Overcomplete36: return overcomplete36();
    case SchemeKind::Custom: break;
    }
    throw std::invalid_argument("TomoScheme::of: custom schemes cannot be rebuilt from their kind");
}

TomoScheme TomoScheme::custom(std::vector<TomoSetting> settings)
{
    return TomoScheme(SchemeKind::Custom, std::move(settings));
}

std::vector<double> setting_normalizations(const TomographyRecord& record)
{
    const std::vector<std::uint64_t>& n = record.counts;
    std::vector<double> norm(n.size(), static_cast<double>(record.pairs_per_setting));
    if (record.scheme == SchemeKind::Overcomplete36) {
        for (std::size_t g = 0; g + 4 <= n.size(); g += 4) {
            const double total = static_cast<double>(n[g] + n[g + 1] + n[g + 2] + n[g + 3]);
            for (std::size_t k = 0; k < 4; ++k)
                norm[g + k] = total;
        }
    }
    return norm;
}

void write_record(std::ostream& out, const TomographyRecord& record)
{
    const TomoScheme scheme = TomoScheme::of(record.scheme);
    if (record.counts.size() != scheme.size())
        throw std::invalid_argument("write_record: count list does not match the scheme");
    out << "scheme=" << scheme.name() << " n=" << record.pairs_per_setting << " seed=" << record.seed << '\n';
    for (std::size_t s = 0; s < scheme.size(); ++s) {
        const TomoSetting& setting = scheme.settings()[s];
        out << label_text(setting.a) << ' ' << label_text(setting.b) << ' ' << record.counts[s] << '\n';
    }
}

std::string format_record(const TomographyRecord& record)
{
    std::ostringstream os;
    write_record(os, record);
    return os.str();
}

namespace {

std::string header_value(std::istringstream& in, std::string_view key)
{
    std::string token;
    if (!(in >> token) || token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0
        || token[key.size()] != '=')
        throw std::invalid_argument("read_record: header must be 'scheme=<name> n=<N> seed=<seed>'");
    return token.substr(key.size() + 1);
}

std::uint64_t parse_u64(std::string_view text, const char* what)
{
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(std::string(text), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-')
        throw std::invalid_argument(std::string("read_record: bad ") + what + " '" + std::string(text) + "'");
    return value;
}

} // namespace

TomographyRecord read_record(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("read_record: empty input");
    TomographyRecord record;
    {
        std::istringstream header(line);
        record.scheme = parse_scheme(header_value(header, "scheme"));
        record.pairs_per_setting = parse_u64(header_value(header, "n"), "n");
        record.seed = parse_u64(header_value(header, "seed"), "seed");
    }
    const TomoScheme scheme = TomoScheme::of(record.scheme);
    for (std::size_t s = 0; s < scheme.size(); ++s) {
        if (!std::getline(in, line))
            throw std::invalid_argument("read_record: expected " + std::to_string(scheme.size()) + " setting lines");
        std::istringstream row(line);
        std::string a, b, count, extra;
        if (!(row >> a >> b >> count) || (row >> extra))
            throw std::invalid_argument("read_record: malformed setting line '" + line + "'");
        const TomoSetting& expected = scheme.settings()[s];
        if (parse_label(a) != expected.a || parse_label(b) != expected.b)
            throw std::invalid_argument("read_record: setting " + std::to_string(s) + " out of scheme order");
        record.counts.push_back(parse_u64(count, "count"));
    }
    return record;
}

TomographyRecord parse_record(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_record(in);
}

std::vector<double> born_probabilities(const DensityMatrix& rho, const TomoScheme& scheme)
{
    if (rho.dim() != 4)
        throw std::invalid_argument("born_probabilities: expected a two-qubit state");
    std::vector<double> p(scheme.size());
    for (std::size_t s = 0; s < scheme.size(); ++s)
        p[s] = (rho.matrix() * scheme.effect(s)).trace().real();
    return p;
}

TomographyRecord simulate_counts(const DensityMatrix& rho, const TomoScheme& scheme,
                                 std::uint64_t n_per_setting, std::uint64_t seed)
{
    if (n_per_setting < 1)
        throw std::invalid_argument("simulate_counts: n_per_setting must be at least 1");
    const std::vector<double> p = born_probabilities(rho, scheme);
    std::mt19937_64 rng(seed);
    TomographyRecord record{scheme.kind(), {}, n_per_setting, seed};
    record.counts.reserve(p.size());
    for (double ps : p) {
        const double mean = static_cast<double>(n_per_setting) * ps;
        if (!(mean > 0.0)) {
            record.counts.push_back(0);
            continue;
        }
        std::poisson_distribution<long long> poisson(mean);
        record.counts.push_back(static_cast<std::uint64_t>(poisson(rng)));
    }
    return record;
}

TomographyRecord expected_counts(const DensityMatrix& rho, const TomoScheme& scheme,
                                 std::uint64_t n_per_setting)
{
    const std::vector<double> p = born_probabilities(rho, scheme);
    TomographyRecord record{scheme.kind(), {}, n_per_setting, 0};
    for (double ps : p)
        record.counts.push_back(ps > 0.0 ? static_cast<std::uint64_t>(std::llround(ps * static_cast<double>(n_per_setting))) : 0);
    return record;
}

LinearInversion linear_inversion(const TomoScheme& scheme, const std::vector<double>& frequencies)
{
    if (frequencies.size() != scheme.size())
        throw std::invalid_argument("linear_inversion: frequency list does not match the scheme");
    // rho = (1/4) sum_k x_k P_k over the 16 two-qubit Pauli products.
    std::array<ComplexMatrix, 16> paulis;
    for (int k = 0; k < 16; ++k)
        paulis[k] = kron(pauli::by_index(k / 4), pauli::by_index(k % 4));

    Eigen::MatrixXd design(static_cast<Eigen::Index>(scheme.size()), 16);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(scheme.size()));
    for (std::size_t s = 0; s < scheme.size(); ++s) {
        const auto row = static_cast<Eigen::Index>(s);
        for (int k = 0; k < 16; ++k)
            design(row, k) = 0.25 * (scheme.effect(s) * paulis[k]).trace().real();
        rhs[row] = frequencies[s];
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 16)
        throw std::invalid_argument("linear_inversion: the scheme is not informationally complete");
    const Eigen::VectorXd x = qr.solve(rhs);

    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    for (int k = 0; k < 16; ++k)
        rho += 0.25 * x[k] * paulis[k];
    const double trace = rho.trace().real();
    if (!(std::abs(trace) > 1e-300))
        throw std::invalid_argument("linear_inversion: reconstructed trace vanishes");
    rho /= trace;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return {rho, hermitian_eig(rho).values[0] >= -1e-9};
}

LinearInversion linear_inversion(const TomographyRecord& record)
{
    const TomoScheme scheme = TomoScheme::of(record.scheme);
    if (record.counts.size() != scheme.size())
        throw std::invalid_argument("linear_inversion: count list does not match the scheme");
    const std::vector<double> norm = setting_normalizations(record);
    std::vector<double> f(record.counts.size());
    for (std::size_t s = 0; s < f.size(); ++s)
        f[s] = norm[s] > 0.0 ? static_cast<double>(record.counts[s]) / norm[s] : 0.0;
    return linear_inversion(scheme, f);
}

DensityMatrix clamp_to_physical(const ComplexMatrix& hermitian)
{
    const EigenDecomposition eig = hermitian_eig(hermitian);
    double total = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        total += std::max(eig.values[k], 0.0);
    if (!(total > 0.0))
        throw std::invalid_argument("clamp_to_physical: no positive spectrum");
    ComplexMatrix m = spectral_apply(eig, [total](double v) { return std::max(v, 0.0) / total; });
    return DensityMatrix(0.5 * (m + m.adjoint()));
}

double estimate_alice_probability(const TomographyRecord& record, const MeasurementSetting& setting)
{
    if (record.scheme != SchemeKind::Overcomplete36)
        throw std::invalid_argument("estimate_alice_probability: requires an overcomplete36 record");
    if (setting.outcome != 0 && setting.outcome != 1)
        throw std::invalid_argument("estimate_alice_probability: outcome must be 0 or 1");
    // Alice's basis order in the scheme is z, x, y.
    int basis_a = 0;
    switch (setting.axis) {
    case PauliAxis::Z: basis_a = 0; break;
    case PauliAxis::X: basis_a = 1; break;
    case PauliAxis::Y: basis_a = 2; break;
    }
    double sum = 0.0;
    int groups = 0;
    for (int basis_b = 0; basis_b < 3; ++basis_b) {
        const std::size_t g = static_cast<std::size_t>(4 * (3 * basis_a + basis_b));
        const auto& n = record.counts;
        const double total = static_cast<double>(n.at(g) + n.at(g + 1) + n.at(g + 2) + n.at(g + 3));
        if (total <= 0.0)
            continue;
        const std::size_t first = g + 2 * static_cast<std::size_t>(setting.outcome);
        sum += static_cast<double>(n[first] + n[first + 1]) / total;
        ++groups;
    }
    if (groups == 0)
        throw std::invalid_argument("estimate_alice_probability: no counts in Alice's basis");
    return sum / groups;
}

} // namespace naqc
