# HTTP surface package
