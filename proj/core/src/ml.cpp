#include "ratcubic/ml.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace ratcubic {

namespace {

// splitmix64; per-tree seeds derived from the master seed
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

FeatureMatrix featurize(const std::vector<DatasetRecord>& records, FeatureMode mode) {
    if (records.empty()) throw std::invalid_argument("featurize: empty record set");
    FeatureMatrix m;
    m.mode = mode;
    m.cols = mode == FeatureMode::Coefficients ? 8 : 6;
    m.rows = records.size();
    m.x.reserve(m.rows * m.cols);
    m.y.reserve(m.rows);
    const double limit = 9007199254740992.0;  // 2^53
    bool overflow = false;
    if (mode == FeatureMode::Invariants) {
        for (const auto& r : records)
            for (const auto& v : r.xi_raw)
                if (std::abs(v.get_d()) > limit) overflow = true;
    }
    for (const auto& r : records) {
        if (mode == FeatureMode::Coefficients) {
            for (auto c : r.coeffs) m.x.push_back(static_cast<double>(c));
        } else {
            // the stored invariant tuple itself, as in the source experiment
            for (const auto& v : r.xi_raw) {
                double d = v.get_d();
                if (overflow) d = (d < 0 ? -1 : 1) * std::log1p(std::abs(d));
                m.x.push_back(d);
            }
        }
        m.y.push_back(numeric_code(r.aut));
    }
    m.log_scaled = overflow;
    return m;
}

std::map<int, double> class_weights(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("class_weights: no labels");
    std::map<int, std::size_t> n;
    for (int y : labels) ++n[y];
    const double N = static_cast<double>(labels.size());
    const double C = static_cast<double>(n.size());
    std::map<int, double> w;
    for (const auto& [cls, cnt] : n) {
        if (cnt == 0) throw std::invalid_argument("class_weights: empty class " + std::to_string(cls));
        w[cls] = N / (C * static_cast<double>(cnt));
    }
    return w;
}

std::pair<FeatureMatrix, FeatureMatrix> stratified_split(const FeatureMatrix& m,
                                                         double test_fraction,
                                                         std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("stratified_split: fraction must be in (0, 1)");
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < m.rows; ++i) by_class[m.y[i]].push_back(i);

    std::vector<std::size_t> test_idx, train_idx;
    std::uint64_t st = seed;
    for (auto& [cls, idx] : by_class) {
        (void)cls;
        // deterministic shuffle
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[splitmix64(st) % i]);
        std::size_t ntest = static_cast<std::size_t>(std::llround(test_fraction * idx.size()));
        if (idx.size() < 2) ntest = 0;                       // singletons stay in train
        else if (ntest >= idx.size()) ntest = idx.size() - 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < ntest ? test_idx : train_idx).push_back(idx[i]);
    }
    std::sort(test_idx.begin(), test_idx.end());
    std::sort(train_idx.begin(), train_idx.end());

    auto take = [&](const std::vector<std::size_t>& rows) {
        FeatureMatrix out;
        out.cols = m.cols;
        out.mode = m.mode;
        out.log_scaled = m.log_scaled;
        out.rows = rows.size();
        out.x.reserve(rows.size() * m.cols);
        out.y.reserve(rows.size());
        for (auto r : rows) {
            for (int c = 0; c < m.cols; ++c) out.x.push_back(m.row(r)[c]);
            out.y.push_back(m.y[r]);
        }
        return out;
    };
    return {take(train_idx), take(test_idx)};
}

int DecisionTree::predict(const double* row) const {
    int n = 0;
    while (nodes[n].feature >= 0)
        n = row[nodes[n].feature] <= nodes[n].threshold ? nodes[n].left : nodes[n].right;
    return nodes[n].prediction;
}

namespace {

struct TreeBuilder {
    const FeatureMatrix& data;
    const std::map<int, double>& weights;
    std::vector<TreeNode>& nodes;
    std::uint64_t rng_state;
    int mtry;

    std::uint64_t rnd() { return splitmix64(rng_state); }

    double node_weight(const std::vector<std::size_t>& idx, std::map<int, double>& mass) {
        mass.clear();
        double tot = 0;
        for (auto i : idx) {
            const double w = weights.at(data.y[i]);
            mass[data.y[i]] += w;
            tot += w;
        }
        return tot;
    }

    static double gini(const std::map<int, double>& mass, double tot) {
        if (tot <= 0) return 0;
        double s = 0;
        for (const auto& [cls, w] : mass) {
            (void)cls;
            const double p = w / tot;
            s += p * p;
        }
        return 1.0 - s;
    }

    int build(std::vector<std::size_t>& idx) {
        std::map<int, double> mass;
        const double tot = node_weight(idx, mass);
        int best_cls = -1;
        double best_mass = -1;
        for (const auto& [cls, w] : mass)
            if (w > best_mass) { best_mass = w; best_cls = cls; }

        const int me = static_cast<int>(nodes.size());
        nodes.push_back(TreeNode{});
        nodes[me].prediction = best_cls;
        if (mass.size() <= 1 || idx.size() < 2) return me;

        const double parent_gini = gini(mass, tot);
        int best_f = -1;
        double best_thr = 0, best_score = -1;

        // sample mtry distinct candidate features
        std::vector<int> feats(data.cols);
        std::iota(feats.begin(), feats.end(), 0);
        for (int i = 0; i < mtry && i < data.cols; ++i)
            std::swap(feats[i], feats[i + rnd() % (data.cols - i)]);

        std::vector<std::pair<double, std::size_t>> vals;
        for (int fi = 0; fi < mtry && fi < data.cols; ++fi) {
            const int f = feats[fi];
            vals.clear();
            vals.reserve(idx.size());
            for (auto i : idx) vals.emplace_back(data.row(i)[f], i);
            std::sort(vals.begin(), vals.end());
            std::map<int, double> left_mass;
            double left_tot = 0;
            for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
                const double w = weights.at(data.y[vals[k].second]);
                left_mass[data.y[vals[k].second]] += w;
                left_tot += w;
                if (vals[k].first == vals[k + 1].first) continue;
                std::map<int, double> right_mass = mass;
                for (const auto& [cls, lw] : left_mass) right_mass[cls] -= lw;
                const double right_tot = tot - left_tot;
                const double score =
                    parent_gini - (left_tot / tot) * gini(left_mass, left_tot) -
                    (right_tot / tot) * gini(right_mass, right_tot);
                if (score > best_score + 1e-15) {
                    best_score = score;
                    best_f = f;
                    best_thr = (vals[k].first + vals[k + 1].first) / 2;
                }
            }
        }
        if (best_f < 0 || best_score <= 0) return me;  // no usable split

        std::vector<std::size_t> li, ri;
        for (auto i : idx)
            (data.row(i)[best_f] <= best_thr ? li : ri).push_back(i);
        if (li.empty() || ri.empty()) return me;
        idx.clear();
        idx.shrink_to_fit();
        nodes[me].feature = best_f;
        nodes[me].threshold = best_thr;
        const int l = build(li);
        nodes[me].left = l;
        const int r = build(ri);
        nodes[me].right = r;
        return me;
    }
};

}  // namespace

void RandomForest::train(const FeatureMatrix& train, const ForestConfig& cfg,
                         const std::map<int, double>& weights) {
    if (train.rows == 0) throw std::invalid_argument("train: empty training set");
    trees_.assign(cfg.tree_count, DecisionTree{});
    classes_.clear();
    for (int y : train.y)
        if (std::find(classes_.begin(), classes_.end(), y) == classes_.end())
            classes_.push_back(y);
    std::sort(classes_.begin(), classes_.end());

    const int mtry = std::max(1, static_cast<int>(std::lround(std::sqrt(double(train.cols)))));
    std::vector<std::uint64_t> seeds(cfg.tree_count);
    std::uint64_t master = cfg.seed;
    for (auto& s : seeds) s = splitmix64(master);

    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= cfg.tree_count) return;
            std::uint64_t st = seeds[t];
            std::vector<std::size_t> idx(train.rows);
            if (cfg.bootstrap) {
                for (auto& i : idx) i = splitmix64(st) % train.rows;
            } else {
                std::iota(idx.begin(), idx.end(), 0);
            }
            TreeBuilder b{train, weights, trees_[t].nodes, st, mtry};
            b.build(idx);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::max(1, cfg.threads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

int RandomForest::predict(const double* row) const {
    std::map<int, int> votes;
    for (const auto& t : trees_) ++votes[t.predict(row)];
    int best = -1, best_n = -1;
    for (const auto& [cls, n] : votes)
        if (n > best_n || (n == best_n && cls < best)) { best_n = n; best = cls; }
    return best;
}

ClassMetrics evaluate_predictions(const std::vector<int>& predicted,
                                  const std::vector<int>& truth) {
    if (predicted.size() != truth.size() || truth.empty())
        throw std::invalid_argument("evaluate: size mismatch or empty");
    ClassMetrics m;
    m.total = truth.size();
    std::map<int, std::size_t> tp, fp, fn, support;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++support[truth[i]];
        if (predicted[i] == truth[i]) {
            ++correct;
            ++tp[truth[i]];
        } else {
            ++fp[predicted[i]];
            ++fn[truth[i]];
        }
    }
    m.accuracy = double(correct) / double(m.total);
    std::set<int> classes;
    for (const auto& [c, n] : support) { (void)n; classes.insert(c); }
    for (const auto& [c, n] : fp) { (void)n; classes.insert(c); }
    double mp = 0, mr = 0, mf = 0, wp = 0, wr = 0, wf = 0;
    for (int c : classes) {
        ClassMetrics::PerClass pc;
        pc.support = support.count(c) ? support[c] : 0;
        const std::size_t tpc = tp.count(c) ? tp[c] : 0;
        const std::size_t fpc = fp.count(c) ? fp[c] : 0;
        const std::size_t fnc = fn.count(c) ? fn[c] : 0;
        const bool has_pred = tpc + fpc > 0, has_true = pc.support > 0;
        pc.defined = has_pred || has_true;
        pc.precision = has_pred ? double(tpc) / double(tpc + fpc) : 0;
        pc.recall = has_true ? double(tpc) / double(tpc + fnc) : 0;
        pc.f1 = (pc.precision + pc.recall > 0)
                    ? 2 * pc.precision * pc.recall / (pc.precision + pc.recall)
                    : 0;
        m.per_class[c] = pc;
        mp += pc.precision;
        mr += pc.recall;
        mf += pc.f1;
        wp += pc.precision * pc.support;
        wr += pc.recall * pc.support;
        wf += pc.f1 * pc.support;
    }
    const double C = double(classes.size());
    m.macro_precision = mp / C;
    m.macro_recall = mr / C;
    m.macro_f1 = mf / C;
    m.weighted_precision = wp / double(m.total);
    m.weighted_recall = wr / double(m.total);
    m.weighted_f1 = wf / double(m.total);
    return m;
}

ClassMetrics evaluate(const RandomForest& model, const FeatureMatrix& test) {
    std::vector<int> pred(test.rows);
    for (std::size_t i = 0; i < test.rows; ++i) pred[i] = model.predict(test.row(i));
    return evaluate_predictions(pred, test.y);
}

std::string ClassMetrics::render() const {
    std::ostringstream os;
    os << "Class      Precision  Recall  F1-score  Support\n";
    char buf[128];
    for (const auto& [c, pc] : per_class) {
        std::snprintf(buf, sizeof buf, "%-12s  %6.2f  %6.2f    %6.2f  %7zu\n",
                      to_string(label_from_code(c)), pc.precision, pc.recall, pc.f1,
                      pc.support);
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "Accuracy %.10f on %zu rows\n", accuracy, total);
    os << buf;
    std::snprintf(buf, sizeof buf, "Macro avg     %6.2f  %6.2f    %6.2f  %7zu\n",
                  macro_precision, macro_recall, macro_f1, total);
    os << buf;
    std::snprintf(buf, sizeof buf, "Weighted avg  %6.2f  %6.2f    %6.2f  %7zu\n",
                  weighted_precision, weighted_recall, weighted_f1, total);
    os << buf;
    return os.str();
}

std::string ClassMetrics::to_json() const {
    std::ostringstream os;
    os << "{\"schema\":1,\"accuracy\":" << accuracy << ",\"total\":" << total << ",\"classes\":{";
    bool first = true;
    for (const auto& [c, pc] : per_class) {
        if (!first) os << ',';
        first = false;
        os << "\"" << to_string(label_from_code(c)) << "\":";
        if (!pc.defined) {
            os << "null";
        } else {
            os << "{\"precision\":" << pc.precision << ",\"recall\":" << pc.recall
               << ",\"f1\":" << pc.f1 << ",\"support\":" << pc.support << "}";
        }
    }
    os << "},\"macro_f1\":" << macro_f1 << ",\"weighted_f1\":" << weighted_f1 << "}";
    return os.str();
}

}  // namespace ratcubic
