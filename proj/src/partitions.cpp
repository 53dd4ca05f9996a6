#include "repstab/partitions.hpp"

#include <algorithm>
#include <functional>

namespace repstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw Error(ErrorCode::InvalidPartition, "parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
    std::vector<int> result;
    for (int column = 1; column <= first(); ++column) {
        int height = 0;
        while (height < length() && parts_[static_cast<std::size_t>(height)] >= column) ++height;
        result.push_back(height);
    }
    return Partition(std::move(result));
}

Partition Partition::unpadded() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt hook_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

bool padding_defined(const Partition& lambda, int n) { return n >= lambda.size() + lambda.first(); }

Partition pad_label(const Partition& lambda, int n) {
    if (!padding_defined(lambda, n)) {
        throw Error(ErrorCode::PaddingUndefined,
                    "V" + lambda.to_string() + "_" + std::to_string(n) + " needs n >= " +
                        std::to_string(lambda.size() + lambda.first()));
    }
    if (n == 0) return {};
    std::vector<int> parts{n - lambda.size()};
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(parts));
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int r) {
    if (r < 0) throw Error(ErrorCode::InvalidArgument, "strip size must be non-negative");
    // Row i of mu may grow up to lambda_{i-1} (no two added boxes share a column);
    // the first row is unbounded and one new row of length <= lambda_last may appear.
    const int rows = lambda.length() + 1;
    std::vector<int> base(lambda.parts());
    base.push_back(0);
    std::vector<Partition> out;
    std::vector<int> mu(base);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == rows) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int v : mu)
                    if (v > 0) parts.push_back(v);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        const int cap = row == 0 ? remaining : std::min(remaining, base[static_cast<std::size_t>(row) - 1] - base[static_cast<std::size_t>(row)]);
        for (int add = cap; add >= 0; --add) {
            mu[static_cast<std::size_t>(row)] = base[static_cast<std::size_t>(row)] + add;
            rec(row + 1, remaining - add);
        }
        mu[static_cast<std::size_t>(row)] = base[static_cast<std::size_t>(row)];
    };
    rec(0, r);
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

BigInt centralizer_order(const Partition& mu) {
    BigInt z = 1;
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu[j] == mu[i]) ++j;
        const int count = j - i;
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(mu[i]), static_cast<unsigned long>(count));
        z *= power * factorial(count);
        i = j;
    }
    return z;
}

int cycle_sign(const Partition& mu) { return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1; }

}  // namespace repstab
