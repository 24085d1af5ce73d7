"""Classification complexity measures for labeled tabular data."""
from .balance import c1, c2
from .dataset import (ComplexityError, Dataset, DatasetView, FeatureColumn, IngestionError,
                      IngestionOptions, dumps_dataset, load_dataset, ovo_aggregate, ovo_views,
                      save_dataset, to_numeric)
from .dimensionality import pca_summary, t2, t3, t4
from .distance import distance_matrix, gower
from .feature_measures import f1, f1v, f2, f3, f4
from .linearity import interpolate, l1, l2, l3, train_linear
from .neighborhood import lsc, n1, n2, n3, n4, nearest_enemy, t1
from .network import build_graph, clustering_coefficient, density, hub_score
from .report import GROUPS, MEASURES, ComplexityReport, RunParams, compute_all, serialize

__version__ = "0.1.0"
