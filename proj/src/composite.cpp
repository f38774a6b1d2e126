#include "iscover/composite.hpp"

#include <algorithm>
#include <utility>

#include "iscover/errors.hpp"

namespace iscover {

ScaledCompositeValue f_bar_scaled(const Instance& inst, const PairSet& s, const HypSet& alive) {
    const long long h_count = inst.hypothesis_count();
    ScaledCompositeValue out;
    out.threshold = inst.alpha * h_count;
    long long survivors = 0;
    for (auto h = alive.find_first(); h != HypSet::npos; h = alive.find_next(h)) {
        ++survivors;
        out.value += std::min(inst.alpha, inst.objectives[h]->value(s));
    }
    out.value += inst.alpha * (h_count - survivors);
    return out;
}

ScaledCompositeValue f_bar_scaled(const Instance& inst, const PairSet& s) {
    return f_bar_scaled(inst, s, inst.qs().version_space(s));
}

bool f_bar_satisfied(const Instance& inst, const PairSet& s) {
    return f_bar_scaled(inst, s).satisfied();
}

namespace {

class ElimCount final : public Objective {
public:
    explicit ElimCount(std::shared_ptr<const QuerySpace> space) : space_(std::move(space)) {}
    long long value(const PairSet& s) const override {
        return space_->hypothesis_count() -
               static_cast<long long>(space_->version_space(s).count());
    }

private:
    std::shared_ptr<const QuerySpace> space_;
};

class ApproxLearning final : public Objective {
public:
    ApproxLearning(std::shared_ptr<const QuerySpace> space, const ApproxLearningParams& params,
                   HypothesisId target)
        : space_(std::move(space)), saturation_(params.data_points - params.kappa) {
        const int h_count = space_->hypothesis_count();
        if (params.kappa < 0 || params.kappa > params.data_points)
            throw parameter_error("approx_learning: kappa must be between 0 and |X|");
        if (target < 0 || target >= h_count)
            throw parameter_error("approx_learning: target out of range");
        if (static_cast<int>(params.predictions.size()) != h_count)
            throw parameter_error("approx_learning: predictions must cover every hypothesis");
        for (const auto& row : params.predictions)
            if (static_cast<int>(row.size()) != params.data_points)
                throw parameter_error("approx_learning: predictions must cover every data point");

        agreement_.resize(h_count);
        for (HypothesisId h = 0; h < h_count; ++h) {
            long long agree = 0;
            for (int x = 0; x < params.data_points; ++x)
                if (params.predictions[h][x] == params.predictions[target][x]) ++agree;
            agreement_[h] = agree;
        }
    }

    long long value(const PairSet& s) const override {
        HypSet alive = space_->version_space(s);
        long long survivors = 0;
        long long total = 0;
        for (auto h = alive.find_first(); h != HypSet::npos; h = alive.find_next(h)) {
            ++survivors;
            total += std::min(saturation_, agreement_[h]);
        }
        total += (space_->hypothesis_count() - survivors) * saturation_;
        return total;
    }

private:
    std::shared_ptr<const QuerySpace> space_;
    long long saturation_;
    std::vector<long long> agreement_;
};

class CompositeAdapter final : public Objective {
public:
    explicit CompositeAdapter(Instance inst) : inst_(std::move(inst)) {}
    long long value(const PairSet& s) const override { return f_bar_scaled(inst_, s).value; }

private:
    Instance inst_;
};

}  // namespace

ObjectivePtr elim_count_objective(const Instance& inst) {
    return std::make_shared<ElimCount>(inst.space);
}

ObjectivePtr approx_learning_objective(const Instance& inst, const ApproxLearningParams& params,
                                       HypothesisId target) {
    return std::make_shared<ApproxLearning>(inst.space, params, target);
}

ObjectivePtr composite_objective(Instance inst) {
    return std::make_shared<CompositeAdapter>(std::move(inst));
}

}  // namespace iscover
