"""Published rejection percentages for the six simulation tables.

Each table maps to a tuple of rows ``(factors..., variant, percent)``; tables 2
and 6 also carry the mean and standard deviation of the bandwidth used.
"""

COLUMNS = {
    1: tuple("family d n tau variant rate".split()),
    2: tuple("family n tau serial variant rate ell_mean ell_std".split()),
    3: tuple("family n tau t variant rate".split()),
    4: tuple("d n tau t variant rate".split()),
    5: tuple("d n tau mu t variant rate".split()),
    6: tuple("n t tau serial variant rate ell_mean ell_std".split()),
}

ROWS = {
    1: (
        ('clayton', 2, 50, 0.0, 'check', 6.2),
        ('clayton', 2, 50, 0.0, 'hat', 4.0),
        ('clayton', 2, 50, 0.0, 'r', 4.6),
        ('gumbel', 2, 50, 0.0, 'check', 5.4),
        ('gumbel', 2, 50, 0.0, 'hat', 2.9),
        ('gumbel', 2, 50, 0.0, 'r', 4.5),
        ('normal', 2, 50, 0.0, 'check', 7.3),
        ('normal', 2, 50, 0.0, 'hat', 3.4),
        ('normal', 2, 50, 0.0, 'r', 4.8),
        ('clayton', 2, 50, 0.25, 'check', 6.7),
        ('clayton', 2, 50, 0.25, 'hat', 6.2),
        ('clayton', 2, 50, 0.25, 'r', 5.6),
        ('gumbel', 2, 50, 0.25, 'check', 5.5),
        ('gumbel', 2, 50, 0.25, 'hat', 3.3),
        ('gumbel', 2, 50, 0.25, 'r', 5.4),
        ('normal', 2, 50, 0.25, 'check', 4.4),
        ('normal', 2, 50, 0.25, 'hat', 3.0),
        ('normal', 2, 50, 0.25, 'r', 6.3),
        ('clayton', 2, 50, 0.5, 'check', 5.6),
        ('clayton', 2, 50, 0.5, 'hat', 7.9),
        ('clayton', 2, 50, 0.5, 'r', 6.0),
        ('gumbel', 2, 50, 0.5, 'check', 4.4),
        ('gumbel', 2, 50, 0.5, 'hat', 3.3),
        ('gumbel', 2, 50, 0.5, 'r', 4.6),
        ('normal', 2, 50, 0.5, 'check', 4.4),
        ('normal', 2, 50, 0.5, 'hat', 5.3),
        ('normal', 2, 50, 0.5, 'r', 4.9),
        ('clayton', 2, 50, 0.75, 'check', 6.0),
        ('clayton', 2, 50, 0.75, 'hat', 16.6),
        ('clayton', 2, 50, 0.75, 'r', 5.5),
        ('gumbel', 2, 50, 0.75, 'check', 3.2),
        ('gumbel', 2, 50, 0.75, 'hat', 6.7),
        ('gumbel', 2, 50, 0.75, 'r', 4.3),
        ('normal', 2, 50, 0.75, 'check', 3.6),
        ('normal', 2, 50, 0.75, 'hat', 9.1),
        ('normal', 2, 50, 0.75, 'r', 4.9),
        ('clayton', 2, 100, 0.0, 'check', 4.9),
        ('clayton', 2, 100, 0.0, 'hat', 3.5),
        ('clayton', 2, 100, 0.0, 'r', 5.3),
        ('gumbel', 2, 100, 0.0, 'check', 5.2),
        ('gumbel', 2, 100, 0.0, 'hat', 4.1),
        ('gumbel', 2, 100, 0.0, 'r', 5.5),
        ('normal', 2, 100, 0.0, 'check', 4.3),
        ('normal', 2, 100, 0.0, 'hat', 2.8),
        ('normal', 2, 100, 0.0, 'r', 5.5),
        ('clayton', 2, 100, 0.25, 'check', 6.1),
        ('clayton', 2, 100, 0.25, 'hat', 6.6),
        ('clayton', 2, 100, 0.25, 'r', 5.0),
        ('gumbel', 2, 100, 0.25, 'check', 5.0),
        ('gumbel', 2, 100, 0.25, 'hat', 3.3),
        ('gumbel', 2, 100, 0.25, 'r', 6.2),
        ('normal', 2, 100, 0.25, 'check', 5.3),
        ('normal', 2, 100, 0.25, 'hat', 4.0),
        ('normal', 2, 100, 0.25, 'r', 5.5),
        ('clayton', 2, 100, 0.5, 'check', 4.4),
        ('clayton', 2, 100, 0.5, 'hat', 9.3),
        ('clayton', 2, 100, 0.5, 'r', 5.9),
        ('gumbel', 2, 100, 0.5, 'check', 3.7),
        ('gumbel', 2, 100, 0.5, 'hat', 2.8),
        ('gumbel', 2, 100, 0.5, 'r', 5.7),
        ('normal', 2, 100, 0.5, 'check', 3.1),
        ('normal', 2, 100, 0.5, 'hat', 3.4),
        ('normal', 2, 100, 0.5, 'r', 5.3),
        ('clayton', 2, 100, 0.75, 'check', 2.7),
        ('clayton', 2, 100, 0.75, 'hat', 10.0),
        ('clayton', 2, 100, 0.75, 'r', 4.6),
        ('gumbel', 2, 100, 0.75, 'check', 2.5),
        ('gumbel', 2, 100, 0.75, 'hat', 4.7),
        ('gumbel', 2, 100, 0.75, 'r', 4.4),
        ('normal', 2, 100, 0.75, 'check', 2.1),
        ('normal', 2, 100, 0.75, 'hat', 6.0),
        ('normal', 2, 100, 0.75, 'r', 5.6),
        ('clayton', 2, 200, 0.0, 'check', 4.0),
        ('clayton', 2, 200, 0.0, 'hat', 3.5),
        ('clayton', 2, 200, 0.0, 'r', 5.2),
        ('gumbel', 2, 200, 0.0, 'check', 4.3),
        ('gumbel', 2, 200, 0.0, 'hat', 4.0),
        ('gumbel', 2, 200, 0.0, 'r', 5.2),
        ('normal', 2, 200, 0.0, 'check', 5.4),
        ('normal', 2, 200, 0.0, 'hat', 4.9),
        ('normal', 2, 200, 0.0, 'r', 4.3),
        ('clayton', 2, 200, 0.25, 'check', 4.7),
        ('clayton', 2, 200, 0.25, 'hat', 5.2),
        ('clayton', 2, 200, 0.25, 'r', 6.3),
        ('gumbel', 2, 200, 0.25, 'check', 3.3),
        ('gumbel', 2, 200, 0.25, 'hat', 3.0),
        ('gumbel', 2, 200, 0.25, 'r', 3.8),
        ('normal', 2, 200, 0.25, 'check', 4.0),
        ('normal', 2, 200, 0.25, 'hat', 3.9),
        ('normal', 2, 200, 0.25, 'r', 5.2),
        ('clayton', 2, 200, 0.5, 'check', 5.1),
        ('clayton', 2, 200, 0.5, 'hat', 8.5),
        ('clayton', 2, 200, 0.5, 'r', 4.9),
        ('gumbel', 2, 200, 0.5, 'check', 3.2),
        ('gumbel', 2, 200, 0.5, 'hat', 2.3),
        ('gumbel', 2, 200, 0.5, 'r', 4.5),
        ('normal', 2, 200, 0.5, 'check', 4.0),
        ('normal', 2, 200, 0.5, 'hat', 4.7),
        ('normal', 2, 200, 0.5, 'r', 4.8),
        ('clayton', 2, 200, 0.75, 'check', 2.6),
        ('clayton', 2, 200, 0.75, 'hat', 9.3),
        ('clayton', 2, 200, 0.75, 'r', 5.9),
        ('gumbel', 2, 200, 0.75, 'check', 1.5),
        ('gumbel', 2, 200, 0.75, 'hat', 3.1),
        ('gumbel', 2, 200, 0.75, 'r', 5.2),
        ('normal', 2, 200, 0.75, 'check', 1.9),
        ('normal', 2, 200, 0.75, 'hat', 4.8),
        ('normal', 2, 200, 0.75, 'r', 5.7),
        ('clayton', 3, 50, 0.0, 'check', 4.3),
        ('clayton', 3, 50, 0.0, 'hat', 1.5),
        ('clayton', 3, 50, 0.0, 'r', 3.0),
        ('gumbel', 3, 50, 0.0, 'check', 4.2),
        ('gumbel', 3, 50, 0.0, 'hat', 2.1),
        ('gumbel', 3, 50, 0.0, 'r', 3.6),
        ('normal', 3, 50, 0.0, 'check', 5.5),
        ('normal', 3, 50, 0.0, 'hat', 2.8),
        ('normal', 3, 50, 0.0, 'r', 3.4),
        ('clayton', 3, 50, 0.25, 'check', 6.3),
        ('clayton', 3, 50, 0.25, 'hat', 5.0),
        ('clayton', 3, 50, 0.25, 'r', 5.1),
        ('gumbel', 3, 50, 0.25, 'check', 5.5),
        ('gumbel', 3, 50, 0.25, 'hat', 1.0),
        ('gumbel', 3, 50, 0.25, 'r', 5.1),
        ('normal', 3, 50, 0.25, 'check', 5.3),
        ('normal', 3, 50, 0.25, 'hat', 3.0),
        ('normal', 3, 50, 0.25, 'r', 4.3),
        ('clayton', 3, 50, 0.5, 'check', 8.2),
        ('clayton', 3, 50, 0.5, 'hat', 9.1),
        ('clayton', 3, 50, 0.5, 'r', 5.9),
        ('gumbel', 3, 50, 0.5, 'check', 2.7),
        ('gumbel', 3, 50, 0.5, 'hat', 0.9),
        ('gumbel', 3, 50, 0.5, 'r', 5.7),
        ('normal', 3, 50, 0.5, 'check', 3.0),
        ('normal', 3, 50, 0.5, 'hat', 2.2),
        ('normal', 3, 50, 0.5, 'r', 4.6),
        ('clayton', 3, 50, 0.75, 'check', 2.0),
        ('clayton', 3, 50, 0.75, 'hat', 2.9),
        ('clayton', 3, 50, 0.75, 'r', 6.9),
        ('gumbel', 3, 50, 0.75, 'check', 0.5),
        ('gumbel', 3, 50, 0.75, 'hat', 0.4),
        ('gumbel', 3, 50, 0.75, 'r', 6.3),
        ('normal', 3, 50, 0.75, 'check', 1.1),
        ('normal', 3, 50, 0.75, 'hat', 1.3),
        ('normal', 3, 50, 0.75, 'r', 4.1),
        ('clayton', 3, 100, 0.0, 'check', 4.5),
        ('clayton', 3, 100, 0.0, 'hat', 3.4),
        ('clayton', 3, 100, 0.0, 'r', 4.5),
        ('gumbel', 3, 100, 0.0, 'check', 4.5),
        ('gumbel', 3, 100, 0.0, 'hat', 2.8),
        ('gumbel', 3, 100, 0.0, 'r', 4.6),
        ('normal', 3, 100, 0.0, 'check', 4.5),
        ('normal', 3, 100, 0.0, 'hat', 2.7),
        ('normal', 3, 100, 0.0, 'r', 3.9),
        ('clayton', 3, 100, 0.25, 'check', 5.0),
        ('clayton', 3, 100, 0.25, 'hat', 5.1),
        ('clayton', 3, 100, 0.25, 'r', 5.4),
        ('gumbel', 3, 100, 0.25, 'check', 4.2),
        ('gumbel', 3, 100, 0.25, 'hat', 2.6),
        ('gumbel', 3, 100, 0.25, 'r', 4.4),
        ('normal', 3, 100, 0.25, 'check', 5.4),
        ('normal', 3, 100, 0.25, 'hat', 3.5),
        ('normal', 3, 100, 0.25, 'r', 4.5),
        ('clayton', 3, 100, 0.5, 'check', 5.7),
        ('clayton', 3, 100, 0.5, 'hat', 7.6),
        ('clayton', 3, 100, 0.5, 'r', 6.3),
        ('gumbel', 3, 100, 0.5, 'check', 3.3),
        ('gumbel', 3, 100, 0.5, 'hat', 1.3),
        ('gumbel', 3, 100, 0.5, 'r', 5.0),
        ('normal', 3, 100, 0.5, 'check', 3.2),
        ('normal', 3, 100, 0.5, 'hat', 3.1),
        ('normal', 3, 100, 0.5, 'r', 3.9),
        ('clayton', 3, 100, 0.75, 'check', 2.5),
        ('clayton', 3, 100, 0.75, 'hat', 4.9),
        ('clayton', 3, 100, 0.75, 'r', 5.0),
        ('gumbel', 3, 100, 0.75, 'check', 1.0),
        ('gumbel', 3, 100, 0.75, 'hat', 1.0),
        ('gumbel', 3, 100, 0.75, 'r', 5.2),
        ('normal', 3, 100, 0.75, 'check', 0.8),
        ('normal', 3, 100, 0.75, 'hat', 1.6),
        ('normal', 3, 100, 0.75, 'r', 5.5),
        ('clayton', 3, 200, 0.0, 'check', 3.3),
        ('clayton', 3, 200, 0.0, 'hat', 2.5),
        ('clayton', 3, 200, 0.0, 'r', 4.3),
        ('gumbel', 3, 200, 0.0, 'check', 3.5),
        ('gumbel', 3, 200, 0.0, 'hat', 3.2),
        ('gumbel', 3, 200, 0.0, 'r', 4.3),
        ('normal', 3, 200, 0.0, 'check', 4.8),
        ('normal', 3, 200, 0.0, 'hat', 4.0),
        ('normal', 3, 200, 0.0, 'r', 4.7),
        ('clayton', 3, 200, 0.25, 'check', 6.6),
        ('clayton', 3, 200, 0.25, 'hat', 7.1),
        ('clayton', 3, 200, 0.25, 'r', 5.5),
        ('gumbel', 3, 200, 0.25, 'check', 5.0),
        ('gumbel', 3, 200, 0.25, 'hat', 3.3),
        ('gumbel', 3, 200, 0.25, 'r', 4.5),
        ('normal', 3, 200, 0.25, 'check', 4.8),
        ('normal', 3, 200, 0.25, 'hat', 4.1),
        ('normal', 3, 200, 0.25, 'r', 5.0),
        ('clayton', 3, 200, 0.5, 'check', 6.0),
        ('clayton', 3, 200, 0.5, 'hat', 9.2),
        ('clayton', 3, 200, 0.5, 'r', 4.5),
        ('gumbel', 3, 200, 0.5, 'check', 3.0),
        ('gumbel', 3, 200, 0.5, 'hat', 2.4),
        ('gumbel', 3, 200, 0.5, 'r', 5.9),
        ('normal', 3, 200, 0.5, 'check', 4.8),
        ('normal', 3, 200, 0.5, 'hat', 4.3),
        ('normal', 3, 200, 0.5, 'r', 4.8),
        ('clayton', 3, 200, 0.75, 'check', 2.9),
        ('clayton', 3, 200, 0.75, 'hat', 6.4),
        ('clayton', 3, 200, 0.75, 'r', 6.4),
        ('gumbel', 3, 200, 0.75, 'check', 0.7),
        ('gumbel', 3, 200, 0.75, 'hat', 0.9),
        ('gumbel', 3, 200, 0.75, 'r', 3.8),
        ('normal', 3, 200, 0.75, 'check', 1.3),
        ('normal', 3, 200, 0.75, 'hat', 2.2),
        ('normal', 3, 200, 0.75, 'r', 4.9),
    ),
    2: (
        ('clayton', 100, 0.0, 'ar1', 'check', 4.2, 14.2, 8.5),
        ('clayton', 100, 0.0, 'ar1', 'hat', 0.7, 14.2, 8.5),
        ('clayton', 100, 0.0, 'expar', 'check', 5.1, 16.7, 9.5),
        ('clayton', 100, 0.0, 'expar', 'hat', 0.6, 16.7, 9.5),
        ('clayton', 100, 0.25, 'ar1', 'check', 5.9, 14.1, 8.6),
        ('clayton', 100, 0.25, 'ar1', 'hat', 1.7, 14.1, 8.6),
        ('clayton', 100, 0.25, 'expar', 'check', 5.5, 16.7, 10.2),
        ('clayton', 100, 0.25, 'expar', 'hat', 2.3, 16.7, 10.2),
        ('clayton', 100, 0.5, 'ar1', 'check', 4.5, 14.0, 10.3),
        ('clayton', 100, 0.5, 'ar1', 'hat', 2.9, 14.0, 10.3),
        ('clayton', 100, 0.5, 'expar', 'check', 6.1, 16.4, 10.7),
        ('clayton', 100, 0.5, 'expar', 'hat', 3.2, 16.4, 10.7),
        ('clayton', 100, 0.75, 'ar1', 'check', 2.7, 13.3, 10.0),
        ('clayton', 100, 0.75, 'ar1', 'hat', 3.3, 13.3, 10.0),
        ('clayton', 100, 0.75, 'expar', 'check', 5.1, 15.5, 10.7),
        ('clayton', 100, 0.75, 'expar', 'hat', 4.7, 15.5, 10.7),
        ('clayton', 200, 0.0, 'ar1', 'check', 5.1, 16.7, 8.0),
        ('clayton', 200, 0.0, 'ar1', 'hat', 2.6, 16.7, 8.0),
        ('clayton', 200, 0.0, 'expar', 'check', 4.5, 20.9, 9.5),
        ('clayton', 200, 0.0, 'expar', 'hat', 1.7, 20.9, 9.5),
        ('clayton', 200, 0.25, 'ar1', 'check', 5.1, 16.0, 7.3),
        ('clayton', 200, 0.25, 'ar1', 'hat', 3.0, 16.0, 7.3),
        ('clayton', 200, 0.25, 'expar', 'check', 4.1, 20.5, 9.7),
        ('clayton', 200, 0.25, 'expar', 'hat', 2.0, 20.5, 9.7),
        ('clayton', 200, 0.5, 'ar1', 'check', 2.6, 15.8, 7.8),
        ('clayton', 200, 0.5, 'ar1', 'hat', 2.5, 15.8, 7.8),
        ('clayton', 200, 0.5, 'expar', 'check', 3.5, 19.8, 9.9),
        ('clayton', 200, 0.5, 'expar', 'hat', 2.8, 19.8, 9.9),
        ('clayton', 200, 0.75, 'ar1', 'check', 1.6, 15.5, 9.0),
        ('clayton', 200, 0.75, 'ar1', 'hat', 3.6, 15.5, 9.0),
        ('clayton', 200, 0.75, 'expar', 'check', 4.3, 19.0, 9.0),
        ('clayton', 200, 0.75, 'expar', 'hat', 4.7, 19.0, 9.0),
        ('gumbel', 100, 0.0, 'ar1', 'check', 4.6, 14.5, 9.7),
        ('gumbel', 100, 0.0, 'ar1', 'hat', 0.9, 14.5, 9.7),
        ('gumbel', 100, 0.0, 'expar', 'check', 4.4, 16.9, 8.2),
        ('gumbel', 100, 0.0, 'expar', 'hat', 0.6, 16.9, 8.2),
        ('gumbel', 100, 0.25, 'ar1', 'check', 4.9, 14.1, 8.7),
        ('gumbel', 100, 0.25, 'ar1', 'hat', 1.5, 14.1, 8.7),
        ('gumbel', 100, 0.25, 'expar', 'check', 5.0, 17.1, 10.2),
        ('gumbel', 100, 0.25, 'expar', 'hat', 0.6, 17.1, 10.2),
        ('gumbel', 100, 0.5, 'ar1', 'check', 3.9, 14.0, 9.5),
        ('gumbel', 100, 0.5, 'ar1', 'hat', 1.2, 14.0, 9.5),
        ('gumbel', 100, 0.5, 'expar', 'check', 4.0, 15.8, 9.5),
        ('gumbel', 100, 0.5, 'expar', 'hat', 0.3, 15.8, 9.5),
        ('gumbel', 100, 0.75, 'ar1', 'check', 2.6, 13.7, 10.0),
        ('gumbel', 100, 0.75, 'ar1', 'hat', 0.5, 13.7, 10.0),
        ('gumbel', 100, 0.75, 'expar', 'check', 1.6, 15.2, 9.2),
        ('gumbel', 100, 0.75, 'expar', 'hat', 0.4, 15.2, 9.2),
        ('gumbel', 200, 0.0, 'ar1', 'check', 4.3, 16.8, 7.9),
        ('gumbel', 200, 0.0, 'ar1', 'hat', 1.8, 16.8, 7.9),
        ('gumbel', 200, 0.0, 'expar', 'check', 3.6, 21.5, 10.1),
        ('gumbel', 200, 0.0, 'expar', 'hat', 1.5, 21.5, 10.1),
        ('gumbel', 200, 0.25, 'ar1', 'check', 5.5, 16.6, 8.8),
        ('gumbel', 200, 0.25, 'ar1', 'hat', 2.0, 16.6, 8.8),
        ('gumbel', 200, 0.25, 'expar', 'check', 5.1, 20.9, 11.5),
        ('gumbel', 200, 0.25, 'expar', 'hat', 1.1, 20.9, 11.5),
        ('gumbel', 200, 0.5, 'ar1', 'check', 3.7, 15.9, 7.4),
        ('gumbel', 200, 0.5, 'ar1', 'hat', 1.6, 15.9, 7.4),
        ('gumbel', 200, 0.5, 'expar', 'check', 2.9, 20.1, 10.9),
        ('gumbel', 200, 0.5, 'expar', 'hat', 0.7, 20.1, 10.9),
        ('gumbel', 200, 0.75, 'ar1', 'check', 1.3, 15.5, 8.7),
        ('gumbel', 200, 0.75, 'ar1', 'hat', 0.9, 15.5, 8.7),
        ('gumbel', 200, 0.75, 'expar', 'check', 1.6, 18.8, 9.1),
        ('gumbel', 200, 0.75, 'expar', 'hat', 0.2, 18.8, 9.1),
        ('normal', 100, 0.0, 'ar1', 'check', 5.0, 14.1, 7.9),
        ('normal', 100, 0.0, 'ar1', 'hat', 1.1, 14.1, 7.9),
        ('normal', 100, 0.0, 'expar', 'check', 5.4, 17.3, 9.2),
        ('normal', 100, 0.0, 'expar', 'hat', 1.4, 17.3, 9.2),
        ('normal', 100, 0.25, 'ar1', 'check', 5.9, 13.5, 8.1),
        ('normal', 100, 0.25, 'ar1', 'hat', 1.4, 13.5, 8.1),
        ('normal', 100, 0.25, 'expar', 'check', 5.0, 17.3, 10.8),
        ('normal', 100, 0.25, 'expar', 'hat', 1.1, 17.3, 10.8),
        ('normal', 100, 0.5, 'ar1', 'check', 3.3, 13.5, 9.1),
        ('normal', 100, 0.5, 'ar1', 'hat', 1.4, 13.5, 9.1),
        ('normal', 100, 0.5, 'expar', 'check', 4.5, 16.4, 9.7),
        ('normal', 100, 0.5, 'expar', 'hat', 1.0, 16.4, 9.7),
        ('normal', 100, 0.75, 'ar1', 'check', 1.7, 12.9, 7.9),
        ('normal', 100, 0.75, 'ar1', 'hat', 1.7, 12.9, 7.9),
        ('normal', 100, 0.75, 'expar', 'check', 2.7, 15.7, 10.8),
        ('normal', 100, 0.75, 'expar', 'hat', 1.1, 15.7, 10.8),
        ('normal', 200, 0.0, 'ar1', 'check', 5.4, 16.3, 6.2),
        ('normal', 200, 0.0, 'ar1', 'hat', 1.9, 16.3, 6.2),
        ('normal', 200, 0.0, 'expar', 'check', 3.7, 20.7, 8.7),
        ('normal', 200, 0.0, 'expar', 'hat', 1.5, 20.7, 8.7),
        ('normal', 200, 0.25, 'ar1', 'check', 4.2, 16.0, 7.1),
        ('normal', 200, 0.25, 'ar1', 'hat', 2.4, 16.0, 7.1),
        ('normal', 200, 0.25, 'expar', 'check', 5.0, 20.9, 8.9),
        ('normal', 200, 0.25, 'expar', 'hat', 1.5, 20.9, 8.9),
        ('normal', 200, 0.5, 'ar1', 'check', 4.2, 16.1, 7.8),
        ('normal', 200, 0.5, 'ar1', 'hat', 3.2, 16.1, 7.8),
        ('normal', 200, 0.5, 'expar', 'check', 2.9, 19.8, 10.4),
        ('normal', 200, 0.5, 'expar', 'hat', 1.8, 19.8, 10.4),
        ('normal', 200, 0.75, 'ar1', 'check', 0.9, 15.4, 7.5),
        ('normal', 200, 0.75, 'ar1', 'hat', 1.4, 15.4, 7.5),
        ('normal', 200, 0.75, 'expar', 'check', 0.8, 19.3, 10.7),
        ('normal', 200, 0.75, 'expar', 'hat', 0.5, 19.3, 10.7),
        ('frank', 100, 0.0, 'ar1', 'check', 5.8, 13.8, 7.8),
        ('frank', 100, 0.0, 'ar1', 'hat', 1.5, 13.8, 7.8),
        ('frank', 100, 0.0, 'expar', 'check', 6.4, 17.4, 9.7),
        ('frank', 100, 0.0, 'expar', 'hat', 0.8, 17.4, 9.7),
        ('frank', 100, 0.25, 'ar1', 'check', 5.5, 14.2, 9.3),
        ('frank', 100, 0.25, 'ar1', 'hat', 1.3, 14.2, 9.3),
        ('frank', 100, 0.25, 'expar', 'check', 4.8, 16.6, 9.7),
        ('frank', 100, 0.25, 'expar', 'hat', 0.5, 16.6, 9.7),
        ('frank', 100, 0.5, 'ar1', 'check', 3.3, 13.9, 9.0),
        ('frank', 100, 0.5, 'ar1', 'hat', 1.7, 13.9, 9.0),
        ('frank', 100, 0.5, 'expar', 'check', 3.6, 16.8, 11.4),
        ('frank', 100, 0.5, 'expar', 'hat', 0.5, 16.8, 11.4),
        ('frank', 100, 0.75, 'ar1', 'check', 1.5, 13.5, 9.7),
        ('frank', 100, 0.75, 'ar1', 'hat', 0.6, 13.5, 9.7),
        ('frank', 100, 0.75, 'expar', 'check', 3.1, 15.8, 10.3),
        ('frank', 100, 0.75, 'expar', 'hat', 1.2, 15.8, 10.3),
        ('frank', 200, 0.0, 'ar1', 'check', 4.2, 16.8, 7.2),
        ('frank', 200, 0.0, 'ar1', 'hat', 2.3, 16.8, 7.2),
        ('frank', 200, 0.0, 'expar', 'check', 4.3, 20.9, 9.4),
        ('frank', 200, 0.0, 'expar', 'hat', 1.4, 20.9, 9.4),
        ('frank', 200, 0.25, 'ar1', 'check', 6.0, 16.0, 7.0),
        ('frank', 200, 0.25, 'ar1', 'hat', 2.9, 16.0, 7.0),
        ('frank', 200, 0.25, 'expar', 'check', 3.6, 20.6, 8.7),
        ('frank', 200, 0.25, 'expar', 'hat', 1.1, 20.6, 8.7),
        ('frank', 200, 0.5, 'ar1', 'check', 3.1, 16.1, 8.2),
        ('frank', 200, 0.5, 'ar1', 'hat', 1.5, 16.1, 8.2),
        ('frank', 200, 0.5, 'expar', 'check', 3.2, 20.3, 10.4),
        ('frank', 200, 0.5, 'expar', 'hat', 1.2, 20.3, 10.4),
        ('frank', 200, 0.75, 'ar1', 'check', 0.9, 15.8, 8.8),
        ('frank', 200, 0.75, 'ar1', 'hat', 0.5, 15.8, 8.8),
        ('frank', 200, 0.75, 'expar', 'check', 1.2, 19.6, 9.0),
        ('frank', 200, 0.75, 'expar', 'hat', 0.8, 19.6, 9.0),
    ),
    3: (
        ('clayton', 50, 0.4, 0.1, 'check', 7.5),
        ('clayton', 50, 0.4, 0.1, 'hat', 8.1),
        ('clayton', 50, 0.4, 0.1, 'r', 5.7),
        ('gumbel', 50, 0.4, 0.1, 'check', 6.1),
        ('gumbel', 50, 0.4, 0.1, 'hat', 3.7),
        ('gumbel', 50, 0.4, 0.1, 'r', 4.3),
        ('normal', 50, 0.4, 0.1, 'check', 6.1),
        ('normal', 50, 0.4, 0.1, 'hat', 4.8),
        ('normal', 50, 0.4, 0.1, 'r', 4.3),
        ('clayton', 50, 0.4, 0.25, 'check', 12.1),
        ('clayton', 50, 0.4, 0.25, 'hat', 10.6),
        ('clayton', 50, 0.4, 0.25, 'r', 4.0),
        ('gumbel', 50, 0.4, 0.25, 'check', 9.4),
        ('gumbel', 50, 0.4, 0.25, 'hat', 5.1),
        ('gumbel', 50, 0.4, 0.25, 'r', 5.0),
        ('normal', 50, 0.4, 0.25, 'check', 10.4),
        ('normal', 50, 0.4, 0.25, 'hat', 7.6),
        ('normal', 50, 0.4, 0.25, 'r', 5.5),
        ('clayton', 50, 0.4, 0.5, 'check', 18.0),
        ('clayton', 50, 0.4, 0.5, 'hat', 16.1),
        ('clayton', 50, 0.4, 0.5, 'r', 6.3),
        ('gumbel', 50, 0.4, 0.5, 'check', 12.1),
        ('gumbel', 50, 0.4, 0.5, 'hat', 7.8),
        ('gumbel', 50, 0.4, 0.5, 'r', 4.8),
        ('normal', 50, 0.4, 0.5, 'check', 12.3),
        ('normal', 50, 0.4, 0.5, 'hat', 8.4),
        ('normal', 50, 0.4, 0.5, 'r', 5.8),
        ('clayton', 50, 0.6, 0.1, 'check', 14.5),
        ('clayton', 50, 0.6, 0.1, 'hat', 17.0),
        ('clayton', 50, 0.6, 0.1, 'r', 5.4),
        ('gumbel', 50, 0.6, 0.1, 'check', 11.4),
        ('gumbel', 50, 0.6, 0.1, 'hat', 7.7),
        ('gumbel', 50, 0.6, 0.1, 'r', 6.2),
        ('normal', 50, 0.6, 0.1, 'check', 11.4),
        ('normal', 50, 0.6, 0.1, 'hat', 9.8),
        ('normal', 50, 0.6, 0.1, 'r', 7.2),
        ('clayton', 50, 0.6, 0.25, 'check', 35.5),
        ('clayton', 50, 0.6, 0.25, 'hat', 34.4),
        ('clayton', 50, 0.6, 0.25, 'r', 7.4),
        ('gumbel', 50, 0.6, 0.25, 'check', 29.9),
        ('gumbel', 50, 0.6, 0.25, 'hat', 21.4),
        ('gumbel', 50, 0.6, 0.25, 'r', 6.4),
        ('normal', 50, 0.6, 0.25, 'check', 31.3),
        ('normal', 50, 0.6, 0.25, 'hat', 21.4),
        ('normal', 50, 0.6, 0.25, 'r', 7.1),
        ('clayton', 50, 0.6, 0.5, 'check', 47.3),
        ('clayton', 50, 0.6, 0.5, 'hat', 41.6),
        ('clayton', 50, 0.6, 0.5, 'r', 7.0),
        ('gumbel', 50, 0.6, 0.5, 'check', 45.3),
        ('gumbel', 50, 0.6, 0.5, 'hat', 30.3),
        ('gumbel', 50, 0.6, 0.5, 'r', 8.9),
        ('normal', 50, 0.6, 0.5, 'check', 46.0),
        ('normal', 50, 0.6, 0.5, 'hat', 33.9),
        ('normal', 50, 0.6, 0.5, 'r', 9.1),
        ('clayton', 100, 0.4, 0.1, 'check', 7.1),
        ('clayton', 100, 0.4, 0.1, 'hat', 8.7),
        ('clayton', 100, 0.4, 0.1, 'r', 6.1),
        ('gumbel', 100, 0.4, 0.1, 'check', 6.6),
        ('gumbel', 100, 0.4, 0.1, 'hat', 5.1),
        ('gumbel', 100, 0.4, 0.1, 'r', 5.1),
        ('normal', 100, 0.4, 0.1, 'check', 5.8),
        ('normal', 100, 0.4, 0.1, 'hat', 5.2),
        ('normal', 100, 0.4, 0.1, 'r', 5.3),
        ('clayton', 100, 0.4, 0.25, 'check', 18.8),
        ('clayton', 100, 0.4, 0.25, 'hat', 19.9),
        ('clayton', 100, 0.4, 0.25, 'r', 5.2),
        ('gumbel', 100, 0.4, 0.25, 'check', 16.9),
        ('gumbel', 100, 0.4, 0.25, 'hat', 13.2),
        ('gumbel', 100, 0.4, 0.25, 'r', 5.8),
        ('normal', 100, 0.4, 0.25, 'check', 14.9),
        ('normal', 100, 0.4, 0.25, 'hat', 12.5),
        ('normal', 100, 0.4, 0.25, 'r', 6.1),
        ('clayton', 100, 0.4, 0.5, 'check', 26.5),
        ('clayton', 100, 0.4, 0.5, 'hat', 26.4),
        ('clayton', 100, 0.4, 0.5, 'r', 7.3),
        ('gumbel', 100, 0.4, 0.5, 'check', 23.8),
        ('gumbel', 100, 0.4, 0.5, 'hat', 18.8),
        ('gumbel', 100, 0.4, 0.5, 'r', 7.3),
        ('normal', 100, 0.4, 0.5, 'check', 22.6),
        ('normal', 100, 0.4, 0.5, 'hat', 19.1),
        ('normal', 100, 0.4, 0.5, 'r', 7.9),
        ('clayton', 100, 0.6, 0.1, 'check', 21.5),
        ('clayton', 100, 0.6, 0.1, 'hat', 25.1),
        ('clayton', 100, 0.6, 0.1, 'r', 5.8),
        ('gumbel', 100, 0.6, 0.1, 'check', 16.7),
        ('gumbel', 100, 0.6, 0.1, 'hat', 12.0),
        ('gumbel', 100, 0.6, 0.1, 'r', 5.1),
        ('normal', 100, 0.6, 0.1, 'check', 17.5),
        ('normal', 100, 0.6, 0.1, 'hat', 16.9),
        ('normal', 100, 0.6, 0.1, 'r', 6.1),
        ('clayton', 100, 0.6, 0.25, 'check', 65.1),
        ('clayton', 100, 0.6, 0.25, 'hat', 66.0),
        ('clayton', 100, 0.6, 0.25, 'r', 6.3),
        ('gumbel', 100, 0.6, 0.25, 'check', 61.2),
        ('gumbel', 100, 0.6, 0.25, 'hat', 51.5),
        ('gumbel', 100, 0.6, 0.25, 'r', 7.5),
        ('normal', 100, 0.6, 0.25, 'check', 62.9),
        ('normal', 100, 0.6, 0.25, 'hat', 54.8),
        ('normal', 100, 0.6, 0.25, 'r', 9.9),
        ('clayton', 100, 0.6, 0.5, 'check', 82.1),
        ('clayton', 100, 0.6, 0.5, 'hat', 81.6),
        ('clayton', 100, 0.6, 0.5, 'r', 14.7),
        ('gumbel', 100, 0.6, 0.5, 'check', 78.8),
        ('gumbel', 100, 0.6, 0.5, 'hat', 69.7),
        ('gumbel', 100, 0.6, 0.5, 'r', 14.9),
        ('normal', 100, 0.6, 0.5, 'check', 79.1),
        ('normal', 100, 0.6, 0.5, 'hat', 73.7),
        ('normal', 100, 0.6, 0.5, 'r', 11.8),
        ('clayton', 200, 0.4, 0.1, 'check', 11.1),
        ('clayton', 200, 0.4, 0.1, 'hat', 13.8),
        ('clayton', 200, 0.4, 0.1, 'r', 5.8),
        ('gumbel', 200, 0.4, 0.1, 'check', 8.3),
        ('gumbel', 200, 0.4, 0.1, 'hat', 8.1),
        ('gumbel', 200, 0.4, 0.1, 'r', 5.5),
        ('normal', 200, 0.4, 0.1, 'check', 9.5),
        ('normal', 200, 0.4, 0.1, 'hat', 9.8),
        ('normal', 200, 0.4, 0.1, 'r', 5.0),
        ('clayton', 200, 0.4, 0.25, 'check', 30.8),
        ('clayton', 200, 0.4, 0.25, 'hat', 33.9),
        ('clayton', 200, 0.4, 0.25, 'r', 5.9),
        ('gumbel', 200, 0.4, 0.25, 'check', 27.6),
        ('gumbel', 200, 0.4, 0.25, 'hat', 24.8),
        ('gumbel', 200, 0.4, 0.25, 'r', 6.4),
        ('normal', 200, 0.4, 0.25, 'check', 29.6),
        ('normal', 200, 0.4, 0.25, 'hat', 28.3),
        ('normal', 200, 0.4, 0.25, 'r', 6.8),
        ('clayton', 200, 0.4, 0.5, 'check', 47.1),
        ('clayton', 200, 0.4, 0.5, 'hat', 48.6),
        ('clayton', 200, 0.4, 0.5, 'r', 9.0),
        ('gumbel', 200, 0.4, 0.5, 'check', 45.8),
        ('gumbel', 200, 0.4, 0.5, 'hat', 41.4),
        ('gumbel', 200, 0.4, 0.5, 'r', 8.7),
        ('normal', 200, 0.4, 0.5, 'check', 47.1),
        ('normal', 200, 0.4, 0.5, 'hat', 46.1),
        ('normal', 200, 0.4, 0.5, 'r', 9.4),
        ('clayton', 200, 0.6, 0.1, 'check', 36.4),
        ('clayton', 200, 0.6, 0.1, 'hat', 41.3),
        ('clayton', 200, 0.6, 0.1, 'r', 6.8),
        ('gumbel', 200, 0.6, 0.1, 'check', 34.4),
        ('gumbel', 200, 0.6, 0.1, 'hat', 31.7),
        ('gumbel', 200, 0.6, 0.1, 'r', 7.1),
        ('normal', 200, 0.6, 0.1, 'check', 36.0),
        ('normal', 200, 0.6, 0.1, 'hat', 36.3),
        ('normal', 200, 0.6, 0.1, 'r', 6.7),
        ('clayton', 200, 0.6, 0.25, 'check', 92.6),
        ('clayton', 200, 0.6, 0.25, 'hat', 93.2),
        ('clayton', 200, 0.6, 0.25, 'r', 12.3),
        ('gumbel', 200, 0.6, 0.25, 'check', 91.4),
        ('gumbel', 200, 0.6, 0.25, 'hat', 88.9),
        ('gumbel', 200, 0.6, 0.25, 'r', 16.7),
        ('normal', 200, 0.6, 0.25, 'check', 91.3),
        ('normal', 200, 0.6, 0.25, 'hat', 90.2),
        ('normal', 200, 0.6, 0.25, 'r', 12.0),
        ('clayton', 200, 0.6, 0.5, 'check', 98.9),
        ('clayton', 200, 0.6, 0.5, 'hat', 99.3),
        ('clayton', 200, 0.6, 0.5, 'r', 22.2),
        ('gumbel', 200, 0.6, 0.5, 'check', 98.5),
        ('gumbel', 200, 0.6, 0.5, 'hat', 98.1),
        ('gumbel', 200, 0.6, 0.5, 'r', 22.0),
        ('normal', 200, 0.6, 0.5, 'check', 99.3),
        ('normal', 200, 0.6, 0.5, 'hat', 99.1),
        ('normal', 200, 0.6, 0.5, 'r', 21.1),
    ),
    4: (
        (2, 100, 0.25, 0.25, 'check', 5.7),
        (2, 100, 0.25, 0.25, 'hat', 4.1),
        (2, 100, 0.25, 0.25, 'r', 5.3),
        (3, 100, 0.25, 0.25, 'check', 5.3),
        (3, 100, 0.25, 0.25, 'hat', 3.1),
        (3, 100, 0.25, 0.25, 'r', 4.4),
        (2, 100, 0.25, 0.5, 'check', 6.2),
        (2, 100, 0.25, 0.5, 'hat', 5.7),
        (2, 100, 0.25, 0.5, 'r', 5.6),
        (3, 100, 0.25, 0.5, 'check', 9.1),
        (3, 100, 0.25, 0.5, 'hat', 6.0),
        (3, 100, 0.25, 0.5, 'r', 5.8),
        (2, 100, 0.25, 0.75, 'check', 6.6),
        (2, 100, 0.25, 0.75, 'hat', 6.3),
        (2, 100, 0.25, 0.75, 'r', 3.5),
        (3, 100, 0.25, 0.75, 'check', 5.8),
        (3, 100, 0.25, 0.75, 'hat', 5.4),
        (3, 100, 0.25, 0.75, 'r', 4.9),
        (2, 100, 0.5, 0.25, 'check', 5.5),
        (2, 100, 0.5, 0.25, 'hat', 5.9),
        (2, 100, 0.5, 0.25, 'r', 5.8),
        (3, 100, 0.5, 0.25, 'check', 4.6),
        (3, 100, 0.5, 0.25, 'hat', 2.9),
        (3, 100, 0.5, 0.25, 'r', 5.0),
        (2, 100, 0.5, 0.5, 'check', 10.5),
        (2, 100, 0.5, 0.5, 'hat', 12.2),
        (2, 100, 0.5, 0.5, 'r', 5.1),
        (3, 100, 0.5, 0.5, 'check', 15.1),
        (3, 100, 0.5, 0.5, 'hat', 15.1),
        (3, 100, 0.5, 0.5, 'r', 6.8),
        (2, 100, 0.5, 0.75, 'check', 8.3),
        (2, 100, 0.5, 0.75, 'hat', 11.9),
        (2, 100, 0.5, 0.75, 'r', 4.4),
        (3, 100, 0.5, 0.75, 'check', 7.7),
        (3, 100, 0.5, 0.75, 'hat', 9.9),
        (3, 100, 0.5, 0.75, 'r', 5.3),
        (2, 100, 0.75, 0.25, 'check', 4.0),
        (2, 100, 0.75, 0.25, 'hat', 7.6),
        (2, 100, 0.75, 0.25, 'r', 5.1),
        (3, 100, 0.75, 0.25, 'check', 2.5),
        (3, 100, 0.75, 0.25, 'hat', 1.9),
        (3, 100, 0.75, 0.25, 'r', 4.3),
        (2, 100, 0.75, 0.5, 'check', 12.5),
        (2, 100, 0.75, 0.5, 'hat', 19.9),
        (2, 100, 0.75, 0.5, 'r', 6.0),
        (3, 100, 0.75, 0.5, 'check', 9.8),
        (3, 100, 0.75, 0.5, 'hat', 13.2),
        (3, 100, 0.75, 0.5, 'r', 5.2),
        (2, 100, 0.75, 0.75, 'check', 8.2),
        (2, 100, 0.75, 0.75, 'hat', 16.4),
        (2, 100, 0.75, 0.75, 'r', 6.5),
        (3, 100, 0.75, 0.75, 'check', 4.8),
        (3, 100, 0.75, 0.75, 'hat', 6.7),
        (3, 100, 0.75, 0.75, 'r', 3.8),
        (2, 200, 0.25, 0.25, 'check', 5.8),
        (2, 200, 0.25, 0.25, 'hat', 5.3),
        (2, 200, 0.25, 0.25, 'r', 6.1),
        (3, 200, 0.25, 0.25, 'check', 5.8),
        (3, 200, 0.25, 0.25, 'hat', 3.7),
        (3, 200, 0.25, 0.25, 'r', 5.8),
        (2, 200, 0.25, 0.5, 'check', 8.5),
        (2, 200, 0.25, 0.5, 'hat', 8.7),
        (2, 200, 0.25, 0.5, 'r', 5.4),
        (3, 200, 0.25, 0.5, 'check', 9.8),
        (3, 200, 0.25, 0.5, 'hat', 9.7),
        (3, 200, 0.25, 0.5, 'r', 6.6),
        (2, 200, 0.25, 0.75, 'check', 6.4),
        (2, 200, 0.25, 0.75, 'hat', 6.9),
        (2, 200, 0.25, 0.75, 'r', 5.5),
        (3, 200, 0.25, 0.75, 'check', 9.0),
        (3, 200, 0.25, 0.75, 'hat', 9.1),
        (3, 200, 0.25, 0.75, 'r', 5.3),
        (2, 200, 0.5, 0.25, 'check', 10.4),
        (2, 200, 0.5, 0.25, 'hat', 11.5),
        (2, 200, 0.5, 0.25, 'r', 6.8),
        (3, 200, 0.5, 0.25, 'check', 12.6),
        (3, 200, 0.5, 0.25, 'hat', 10.1),
        (3, 200, 0.5, 0.25, 'r', 6.7),
        (2, 200, 0.5, 0.5, 'check', 30.9),
        (2, 200, 0.5, 0.5, 'hat', 37.5),
        (2, 200, 0.5, 0.5, 'r', 5.3),
        (3, 200, 0.5, 0.5, 'check', 44.0),
        (3, 200, 0.5, 0.5, 'hat', 45.8),
        (3, 200, 0.5, 0.5, 'r', 7.1),
        (2, 200, 0.5, 0.75, 'check', 16.3),
        (2, 200, 0.5, 0.75, 'hat', 23.2),
        (2, 200, 0.5, 0.75, 'r', 6.1),
        (3, 200, 0.5, 0.75, 'check', 20.1),
        (3, 200, 0.5, 0.75, 'hat', 27.0),
        (3, 200, 0.5, 0.75, 'r', 5.1),
        (2, 200, 0.75, 0.25, 'check', 11.3),
        (2, 200, 0.75, 0.25, 'hat', 18.0),
        (2, 200, 0.75, 0.25, 'r', 4.9),
        (3, 200, 0.75, 0.25, 'check', 15.6),
        (3, 200, 0.75, 0.25, 'hat', 16.7),
        (3, 200, 0.75, 0.25, 'r', 7.3),
        (2, 200, 0.75, 0.5, 'check', 43.4),
        (2, 200, 0.75, 0.5, 'hat', 54.4),
        (2, 200, 0.75, 0.5, 'r', 6.2),
        (3, 200, 0.75, 0.5, 'check', 58.9),
        (3, 200, 0.75, 0.5, 'hat', 63.1),
        (3, 200, 0.75, 0.5, 'r', 5.2),
        (2, 200, 0.75, 0.75, 'check', 21.3),
        (2, 200, 0.75, 0.75, 'hat', 36.4),
        (2, 200, 0.75, 0.75, 'r', 4.6),
        (3, 200, 0.75, 0.75, 'check', 23.6),
        (3, 200, 0.75, 0.75, 'hat', 36.0),
        (3, 200, 0.75, 0.75, 'r', 6.8),
    ),
    5: (
        (2, 50, 0.0, 0.5, 0.25, 'check', 6.7),
        (2, 50, 0.0, 0.5, 0.25, 'hat', 3.8),
        (2, 50, 0.0, 0.5, 0.25, 'r', 9.0),
        (2, 50, 0.0, 0.5, 0.5, 'check', 6.5),
        (2, 50, 0.0, 0.5, 0.5, 'hat', 3.1),
        (2, 50, 0.0, 0.5, 0.5, 'r', 17.7),
        (2, 50, 0.0, 2.0, 0.25, 'check', 4.6),
        (2, 50, 0.0, 2.0, 0.25, 'hat', 2.4),
        (2, 50, 0.0, 2.0, 0.25, 'r', 70.1),
        (2, 50, 0.0, 2.0, 0.5, 'check', 5.1),
        (2, 50, 0.0, 2.0, 0.5, 'hat', 2.6),
        (2, 50, 0.0, 2.0, 0.5, 'r', 98.5),
        (2, 50, 0.25, 0.5, 0.25, 'check', 5.6),
        (2, 50, 0.25, 0.5, 0.25, 'hat', 2.8),
        (2, 50, 0.25, 0.5, 0.25, 'r', 8.1),
        (2, 50, 0.25, 0.5, 0.5, 'check', 4.8),
        (2, 50, 0.25, 0.5, 0.5, 'hat', 3.6),
        (2, 50, 0.25, 0.5, 0.5, 'r', 15.0),
        (2, 50, 0.25, 2.0, 0.25, 'check', 6.0),
        (2, 50, 0.25, 2.0, 0.25, 'hat', 3.1),
        (2, 50, 0.25, 2.0, 0.25, 'r', 57.7),
        (2, 50, 0.25, 2.0, 0.5, 'check', 4.7),
        (2, 50, 0.25, 2.0, 0.5, 'hat', 1.6),
        (2, 50, 0.25, 2.0, 0.5, 'r', 98.5),
        (2, 50, 0.5, 0.5, 0.25, 'check', 4.4),
        (2, 50, 0.5, 0.5, 0.25, 'hat', 4.1),
        (2, 50, 0.5, 0.5, 0.25, 'r', 9.6),
        (2, 50, 0.5, 0.5, 0.5, 'check', 3.4),
        (2, 50, 0.5, 0.5, 0.5, 'hat', 2.9),
        (2, 50, 0.5, 0.5, 0.5, 'r', 13.0),
        (2, 50, 0.5, 2.0, 0.25, 'check', 18.4),
        (2, 50, 0.5, 2.0, 0.25, 'hat', 5.1),
        (2, 50, 0.5, 2.0, 0.25, 'r', 39.6),
        (2, 50, 0.5, 2.0, 0.5, 'check', 5.7),
        (2, 50, 0.5, 2.0, 0.5, 'hat', 0.9),
        (2, 50, 0.5, 2.0, 0.5, 'r', 99.3),
        (2, 100, 0.0, 0.5, 0.25, 'check', 5.3),
        (2, 100, 0.0, 0.5, 0.25, 'hat', 4.0),
        (2, 100, 0.0, 0.5, 0.25, 'r', 19.0),
        (2, 100, 0.0, 0.5, 0.5, 'check', 6.3),
        (2, 100, 0.0, 0.5, 0.5, 'hat', 5.2),
        (2, 100, 0.0, 0.5, 0.5, 'r', 30.4),
        (2, 100, 0.0, 2.0, 0.25, 'check', 6.1),
        (2, 100, 0.0, 2.0, 0.25, 'hat', 4.1),
        (2, 100, 0.0, 2.0, 0.25, 'r', 99.0),
        (2, 100, 0.0, 2.0, 0.5, 'check', 5.5),
        (2, 100, 0.0, 2.0, 0.5, 'hat', 2.5),
        (2, 100, 0.0, 2.0, 0.5, 'r', 100.0),
        (2, 100, 0.25, 0.5, 0.25, 'check', 5.0),
        (2, 100, 0.25, 0.5, 0.25, 'hat', 4.4),
        (2, 100, 0.25, 0.5, 0.25, 'r', 13.9),
        (2, 100, 0.25, 0.5, 0.5, 'check', 3.7),
        (2, 100, 0.25, 0.5, 0.5, 'hat', 2.3),
        (2, 100, 0.25, 0.5, 0.5, 'r', 24.9),
        (2, 100, 0.25, 2.0, 0.25, 'check', 8.6),
        (2, 100, 0.25, 2.0, 0.25, 'hat', 4.7),
        (2, 100, 0.25, 2.0, 0.25, 'r', 97.5),
        (2, 100, 0.25, 2.0, 0.5, 'check', 4.4),
        (2, 100, 0.25, 2.0, 0.5, 'hat', 2.2),
        (2, 100, 0.25, 2.0, 0.5, 'r', 100.0),
        (2, 100, 0.5, 0.5, 0.25, 'check', 4.0),
        (2, 100, 0.5, 0.5, 0.25, 'hat', 3.8),
        (2, 100, 0.5, 0.5, 0.25, 'r', 11.5),
        (2, 100, 0.5, 0.5, 0.5, 'check', 3.1),
        (2, 100, 0.5, 0.5, 0.5, 'hat', 3.1),
        (2, 100, 0.5, 0.5, 0.5, 'r', 22.6),
        (2, 100, 0.5, 2.0, 0.25, 'check', 29.5),
        (2, 100, 0.5, 2.0, 0.25, 'hat', 13.1),
        (2, 100, 0.5, 2.0, 0.25, 'r', 91.6),
        (2, 100, 0.5, 2.0, 0.5, 'check', 12.4),
        (2, 100, 0.5, 2.0, 0.5, 'hat', 2.0),
        (2, 100, 0.5, 2.0, 0.5, 'r', 100.0),
        (2, 200, 0.0, 0.5, 0.25, 'check', 5.5),
        (2, 200, 0.0, 0.5, 0.25, 'hat', 5.2),
        (2, 200, 0.0, 0.5, 0.25, 'r', 34.1),
        (2, 200, 0.0, 0.5, 0.5, 'check', 3.9),
        (2, 200, 0.0, 0.5, 0.5, 'hat', 3.4),
        (2, 200, 0.0, 0.5, 0.5, 'r', 61.9),
        (2, 200, 0.0, 2.0, 0.25, 'check', 4.3),
        (2, 200, 0.0, 2.0, 0.25, 'hat', 3.3),
        (2, 200, 0.0, 2.0, 0.25, 'r', 100.0),
        (2, 200, 0.0, 2.0, 0.5, 'check', 5.6),
        (2, 200, 0.0, 2.0, 0.5, 'hat', 4.1),
        (2, 200, 0.0, 2.0, 0.5, 'r', 100.0),
        (2, 200, 0.25, 0.5, 0.25, 'check', 3.9),
        (2, 200, 0.25, 0.5, 0.25, 'hat', 3.4),
        (2, 200, 0.25, 0.5, 0.25, 'r', 27.6),
        (2, 200, 0.25, 0.5, 0.5, 'check', 4.1),
        (2, 200, 0.25, 0.5, 0.5, 'hat', 3.5),
        (2, 200, 0.25, 0.5, 0.5, 'r', 51.3),
        (2, 200, 0.25, 2.0, 0.25, 'check', 13.6),
        (2, 200, 0.25, 2.0, 0.25, 'hat', 8.9),
        (2, 200, 0.25, 2.0, 0.25, 'r', 100.0),
        (2, 200, 0.25, 2.0, 0.5, 'check', 8.1),
        (2, 200, 0.25, 2.0, 0.5, 'hat', 4.0),
        (2, 200, 0.25, 2.0, 0.5, 'r', 100.0),
        (2, 200, 0.5, 0.5, 0.25, 'check', 3.4),
        (2, 200, 0.5, 0.5, 0.25, 'hat', 3.9),
        (2, 200, 0.5, 0.5, 0.25, 'r', 18.9),
        (2, 200, 0.5, 0.5, 0.5, 'check', 2.8),
        (2, 200, 0.5, 0.5, 0.5, 'hat', 2.9),
        (2, 200, 0.5, 0.5, 0.5, 'r', 43.1),
        (2, 200, 0.5, 2.0, 0.25, 'check', 57.8),
        (2, 200, 0.5, 2.0, 0.25, 'hat', 39.4),
        (2, 200, 0.5, 2.0, 0.25, 'r', 100.0),
        (2, 200, 0.5, 2.0, 0.5, 'check', 34.8),
        (2, 200, 0.5, 2.0, 0.5, 'hat', 8.3),
        (2, 200, 0.5, 2.0, 0.5, 'r', 100.0),
        (3, 50, 0.0, 0.5, 0.25, 'check', 4.9),
        (3, 50, 0.0, 0.5, 0.25, 'hat', 1.6),
        (3, 50, 0.0, 0.5, 0.25, 'r', 5.0),
        (3, 50, 0.0, 0.5, 0.5, 'check', 4.5),
        (3, 50, 0.0, 0.5, 0.5, 'hat', 1.7),
        (3, 50, 0.0, 0.5, 0.5, 'r', 10.0),
        (3, 50, 0.0, 2.0, 0.25, 'check', 4.8),
        (3, 50, 0.0, 2.0, 0.25, 'hat', 1.9),
        (3, 50, 0.0, 2.0, 0.25, 'r', 36.5),
        (3, 50, 0.0, 2.0, 0.5, 'check', 6.0),
        (3, 50, 0.0, 2.0, 0.5, 'hat', 2.3),
        (3, 50, 0.0, 2.0, 0.5, 'r', 79.6),
        (3, 50, 0.25, 0.5, 0.25, 'check', 5.0),
        (3, 50, 0.25, 0.5, 0.25, 'hat', 2.7),
        (3, 50, 0.25, 0.5, 0.25, 'r', 6.9),
        (3, 50, 0.25, 0.5, 0.5, 'check', 5.0),
        (3, 50, 0.25, 0.5, 0.5, 'hat', 2.6),
        (3, 50, 0.25, 0.5, 0.5, 'r', 9.9),
        (3, 50, 0.25, 2.0, 0.25, 'check', 6.9),
        (3, 50, 0.25, 2.0, 0.25, 'hat', 2.6),
        (3, 50, 0.25, 2.0, 0.25, 'r', 24.8),
        (3, 50, 0.25, 2.0, 0.5, 'check', 5.1),
        (3, 50, 0.25, 2.0, 0.5, 'hat', 2.6),
        (3, 50, 0.25, 2.0, 0.5, 'r', 87.4),
        (3, 50, 0.5, 0.5, 0.25, 'check', 3.7),
        (3, 50, 0.5, 0.5, 0.25, 'hat', 2.6),
        (3, 50, 0.5, 0.5, 0.25, 'r', 5.5),
        (3, 50, 0.5, 0.5, 0.5, 'check', 3.3),
        (3, 50, 0.5, 0.5, 0.5, 'hat', 1.3),
        (3, 50, 0.5, 0.5, 0.5, 'r', 8.9),
        (3, 50, 0.5, 2.0, 0.25, 'check', 9.4),
        (3, 50, 0.5, 2.0, 0.25, 'hat', 3.5),
        (3, 50, 0.5, 2.0, 0.25, 'r', 17.4),
        (3, 50, 0.5, 2.0, 0.5, 'check', 3.0),
        (3, 50, 0.5, 2.0, 0.5, 'hat', 0.7),
        (3, 50, 0.5, 2.0, 0.5, 'r', 94.2),
        (3, 100, 0.0, 0.5, 0.25, 'check', 4.5),
        (3, 100, 0.0, 0.5, 0.25, 'hat', 2.3),
        (3, 100, 0.0, 0.5, 0.25, 'r', 11.3),
        (3, 100, 0.0, 0.5, 0.5, 'check', 4.2),
        (3, 100, 0.0, 0.5, 0.5, 'hat', 2.5),
        (3, 100, 0.0, 0.5, 0.5, 'r', 18.6),
        (3, 100, 0.0, 2.0, 0.25, 'check', 4.8),
        (3, 100, 0.0, 2.0, 0.25, 'hat', 3.0),
        (3, 100, 0.0, 2.0, 0.25, 'r', 87.5),
        (3, 100, 0.0, 2.0, 0.5, 'check', 3.6),
        (3, 100, 0.0, 2.0, 0.5, 'hat', 2.0),
        (3, 100, 0.0, 2.0, 0.5, 'r', 99.6),
        (3, 100, 0.25, 0.5, 0.25, 'check', 4.9),
        (3, 100, 0.25, 0.5, 0.25, 'hat', 3.1),
        (3, 100, 0.25, 0.5, 0.25, 'r', 10.7),
        (3, 100, 0.25, 0.5, 0.5, 'check', 5.1),
        (3, 100, 0.25, 0.5, 0.5, 'hat', 3.5),
        (3, 100, 0.25, 0.5, 0.5, 'r', 14.8),
        (3, 100, 0.25, 2.0, 0.25, 'check', 6.7),
        (3, 100, 0.25, 2.0, 0.25, 'hat', 3.8),
        (3, 100, 0.25, 2.0, 0.25, 'r', 67.9),
        (3, 100, 0.25, 2.0, 0.5, 'check', 5.9),
        (3, 100, 0.25, 2.0, 0.5, 'hat', 4.2),
        (3, 100, 0.25, 2.0, 0.5, 'r', 99.9),
        (3, 100, 0.5, 0.5, 0.25, 'check', 2.8),
        (3, 100, 0.5, 0.5, 0.25, 'hat', 2.0),
        (3, 100, 0.5, 0.5, 0.25, 'r', 7.3),
        (3, 100, 0.5, 0.5, 0.5, 'check', 3.0),
        (3, 100, 0.5, 0.5, 0.5, 'hat', 2.4),
        (3, 100, 0.5, 0.5, 0.5, 'r', 13.7),
        (3, 100, 0.5, 2.0, 0.25, 'check', 16.9),
        (3, 100, 0.5, 2.0, 0.25, 'hat', 8.6),
        (3, 100, 0.5, 2.0, 0.25, 'r', 60.6),
        (3, 100, 0.5, 2.0, 0.5, 'check', 6.0),
        (3, 100, 0.5, 2.0, 0.5, 'hat', 1.3),
        (3, 100, 0.5, 2.0, 0.5, 'r', 100.0),
        (3, 200, 0.0, 0.5, 0.25, 'check', 3.0),
        (3, 200, 0.0, 0.5, 0.25, 'hat', 2.4),
        (3, 200, 0.0, 0.5, 0.25, 'r', 20.1),
        (3, 200, 0.0, 0.5, 0.5, 'check', 4.5),
        (3, 200, 0.0, 0.5, 0.5, 'hat', 4.0),
        (3, 200, 0.0, 0.5, 0.5, 'r', 37.3),
        (3, 200, 0.0, 2.0, 0.25, 'check', 5.3),
        (3, 200, 0.0, 2.0, 0.25, 'hat', 3.3),
        (3, 200, 0.0, 2.0, 0.25, 'r', 100.0),
        (3, 200, 0.0, 2.0, 0.5, 'check', 4.3),
        (3, 200, 0.0, 2.0, 0.5, 'hat', 3.2),
        (3, 200, 0.0, 2.0, 0.5, 'r', 100.0),
        (3, 200, 0.25, 0.5, 0.25, 'check', 4.8),
        (3, 200, 0.25, 0.5, 0.25, 'hat', 4.1),
        (3, 200, 0.25, 0.5, 0.25, 'r', 15.3),
        (3, 200, 0.25, 0.5, 0.5, 'check', 5.6),
        (3, 200, 0.25, 0.5, 0.5, 'hat', 4.4),
        (3, 200, 0.25, 0.5, 0.5, 'r', 30.6),
        (3, 200, 0.25, 2.0, 0.25, 'check', 11.9),
        (3, 200, 0.25, 2.0, 0.25, 'hat', 8.1),
        (3, 200, 0.25, 2.0, 0.25, 'r', 99.2),
        (3, 200, 0.25, 2.0, 0.5, 'check', 7.4),
        (3, 200, 0.25, 2.0, 0.5, 'hat', 5.2),
        (3, 200, 0.25, 2.0, 0.5, 'r', 100.0),
        (3, 200, 0.5, 0.5, 0.25, 'check', 4.9),
        (3, 200, 0.5, 0.5, 0.25, 'hat', 3.7),
        (3, 200, 0.5, 0.5, 0.25, 'r', 11.8),
        (3, 200, 0.5, 0.5, 0.5, 'check', 3.8),
        (3, 200, 0.5, 0.5, 0.5, 'hat', 3.2),
        (3, 200, 0.5, 0.5, 0.5, 'r', 24.9),
        (3, 200, 0.5, 2.0, 0.25, 'check', 41.0),
        (3, 200, 0.5, 2.0, 0.25, 'hat', 30.9),
        (3, 200, 0.5, 2.0, 0.25, 'r', 99.2),
        (3, 200, 0.5, 2.0, 0.5, 'check', 23.9),
        (3, 200, 0.5, 2.0, 0.5, 'hat', 7.8),
        (3, 200, 0.5, 2.0, 0.5, 'r', 100.0),
    ),
    6: (
        (100, 0.25, 0.4, 'ar1', 'check', 13.8, 14.2, 10.1),
        (100, 0.25, 0.4, 'ar1', 'hat', 3.8, 14.2, 10.1),
        (100, 0.25, 0.4, 'expar', 'check', 10.6, 16.9, 10.5),
        (100, 0.25, 0.4, 'expar', 'hat', 1.5, 16.9, 10.5),
        (100, 0.25, 0.6, 'ar1', 'check', 39.9, 14.1, 9.1),
        (100, 0.25, 0.6, 'ar1', 'hat', 10.6, 14.1, 9.1),
        (100, 0.25, 0.6, 'expar', 'check', 32.6, 15.8, 9.5),
        (100, 0.25, 0.6, 'expar', 'hat', 8.5, 15.8, 9.5),
        (100, 0.5, 0.4, 'ar1', 'check', 18.0, 14.3, 10.1),
        (100, 0.5, 0.4, 'ar1', 'hat', 5.3, 14.3, 10.1),
        (100, 0.5, 0.4, 'expar', 'check', 13.5, 17.1, 10.3),
        (100, 0.5, 0.4, 'expar', 'hat', 2.5, 17.1, 10.3),
        (100, 0.5, 0.6, 'ar1', 'check', 57.2, 13.9, 8.6),
        (100, 0.5, 0.6, 'ar1', 'hat', 25.2, 13.9, 8.6),
        (100, 0.5, 0.6, 'expar', 'check', 54.8, 16.5, 9.3),
        (100, 0.5, 0.6, 'expar', 'hat', 17.1, 16.5, 9.3),
        (200, 0.25, 0.4, 'ar1', 'check', 16.4, 16.5, 8.6),
        (200, 0.25, 0.4, 'ar1', 'hat', 8.6, 16.5, 8.6),
        (200, 0.25, 0.4, 'expar', 'check', 14.6, 20.6, 9.8),
        (200, 0.25, 0.4, 'expar', 'hat', 4.5, 20.6, 9.8),
        (200, 0.25, 0.6, 'ar1', 'check', 71.2, 16.4, 8.0),
        (200, 0.25, 0.6, 'ar1', 'hat', 46.0, 16.4, 8.0),
        (200, 0.25, 0.6, 'expar', 'check', 63.1, 19.6, 9.0),
        (200, 0.25, 0.6, 'expar', 'hat', 32.5, 19.6, 9.0),
        (200, 0.5, 0.4, 'ar1', 'check', 31.9, 16.6, 7.4),
        (200, 0.5, 0.4, 'ar1', 'hat', 19.0, 16.6, 7.4),
        (200, 0.5, 0.4, 'expar', 'check', 25.8, 20.7, 8.8),
        (200, 0.5, 0.4, 'expar', 'hat', 12.4, 20.7, 8.8),
        (200, 0.5, 0.6, 'ar1', 'check', 89.8, 16.3, 7.1),
        (200, 0.5, 0.6, 'ar1', 'hat', 75.5, 16.3, 7.1),
        (200, 0.5, 0.6, 'expar', 'check', 80.9, 20.6, 9.1),
        (200, 0.5, 0.6, 'expar', 'hat', 62.5, 20.6, 9.1),
    ),
}



def reference_rows(table_id):
    """Rows of one table as dicts keyed by :data:`COLUMNS`."""
    cols = COLUMNS[table_id]
    return [dict(zip(cols, row)) for row in ROWS[table_id]]
