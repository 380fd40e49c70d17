int h2z_placeholder_test_angular;
